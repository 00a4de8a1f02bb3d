#include "braidfrac/lamination.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidfrac/errors.hpp"

namespace braidfrac {

namespace {

using i64 = std::int64_t;

i64 pos(i64 x) { return std::max<i64>(x, 0); }
i64 neg(i64 x) { return std::min<i64>(x, 0); }

constexpr i64 kLimit = i64{1} << 60;

void check(i64 v) {
  if (v > kLimit || v < -kLimit) throw BudgetExceeded("lamination coordinate overflow");
}

}  // namespace

LaminationCoords LaminationCoords::initial(int strands) {
  LaminationCoords c;
  c.values.resize(2 * static_cast<std::size_t>(strands));
  for (int i = 0; i < strands; ++i) {
    c.values[2 * i] = 0;
    c.values[2 * i + 1] = 1;
  }
  return c;
}

LaminationCoords lamination_act(const BraidWord& w, LaminationCoords c) {
  auto& v = c.values;
  for (int letter : w.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
    i64 a1 = v[2 * i], b1 = v[2 * i + 1], a2 = v[2 * i + 2], b2 = v[2 * i + 3];
    i64 na1, nb1, na2, nb2;
    if (letter > 0) {
      i64 t = a1 - neg(b1) - a2 + pos(b2);
      na1 = a1 + pos(b1) + pos(pos(b2) - t);
      nb1 = b2 - pos(t);
      na2 = a2 + neg(b2) + neg(neg(b1) + t);
      nb2 = b1 + pos(t);
    } else {
      i64 t = a1 + neg(b1) - a2 - pos(b2);
      na1 = a1 - pos(b1) - pos(pos(b2) + t);
      nb1 = b2 + neg(t);
      na2 = a2 - neg(b2) - neg(neg(b1) - t);
      nb2 = b1 - neg(t);
    }
    check(na1), check(nb1), check(na2), check(nb2);
    v[2 * i] = na1, v[2 * i + 1] = nb1, v[2 * i + 2] = na2, v[2 * i + 3] = nb2;
  }
  return c;
}

LaminationCoords lamination_apply(const BraidWord& w) {
  return lamination_act(w, LaminationCoords::initial(w.strands));
}

bool lamination_trivial(const BraidWord& w) {
  return lamination_apply(w) == LaminationCoords::initial(w.strands);
}

}  // namespace braidfrac
