#include "braidfrac/digital_braid.hpp"

#include <cstdlib>
#include <numeric>

#include "braidfrac/errors.hpp"

namespace braidfrac {

DigitalBraid::DigitalBraid(Word top, Word bottom, BraidWord word)
    : top_(std::move(top)), bottom_(std::move(bottom)), word_(std::move(word)) {
  if (top_.size() != bottom_.size())
    throw MismatchError("digital braid endpoints have different lengths");
  if (static_cast<std::size_t>(word_.strands) != std::max<std::size_t>(top_.size(), 1))
    throw MismatchError("digital braid strand count differs from its endpoint length");
  Permutation p = permutation_of(word_);
  for (std::size_t i = 0; i < top_.size(); ++i)
    if (bottom_[p.images[i]] != top_[i])
      throw MismatchError("strand from top position " + std::to_string(i + 1) +
                          " joins different letters");
}

DigitalBraid DigitalBraid::trivial(const Word& w) {
  return DigitalBraid(w, w, BraidWord(static_cast<int>(std::max<std::size_t>(w.size(), 1)), {}));
}

DigitalBraid DigitalBraid::from_top(Word top, BraidWord word) {
  Permutation p = permutation_of(word);
  if (static_cast<std::size_t>(word.strands) != std::max<std::size_t>(top.size(), 1))
    throw MismatchError("digital braid strand count differs from its endpoint length");
  Word bottom(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) bottom[p.images[i]] = top[i];
  return DigitalBraid(std::move(top), std::move(bottom), std::move(word));
}

DigitalBraid braid_compose(const DigitalBraid& a, const DigitalBraid& b) {
  if (a.strands() != b.strands()) throw MismatchError("compose: strand counts differ");
  if (a.bottom() != b.top()) throw MismatchError("compose: bottom labels differ from top labels");
  return DigitalBraid(a.top(), b.bottom(), free_reduce(braid_concat(a.word(), b.word())));
}

DigitalBraid braid_invert(const DigitalBraid& g) {
  return DigitalBraid(g.bottom(), g.top(), braid_inverse(g.word()));
}

BraidWord forget_digits(const DigitalBraid& g) { return g.word(); }

bool is_pure(const DigitalBraid& g) { return permutation_of(g.word()).is_identity(); }

bool digital_equal(const DigitalBraid& a, const DigitalBraid& b) {
  return a.top() == b.top() && a.bottom() == b.bottom() && braid_equal(a.word(), b.word());
}

BraidWord cable_crossing(int offset, int left, int right, int sign, int total) {
  BraidWord out;
  out.strands = total;
  out.letters.reserve(static_cast<std::size_t>(left) * right);
  if (sign > 0) {
    // Rightmost strand of the left cable first, each sliding over the right cable.
    for (int a = left; a >= 1; --a)
      for (int s = 0; s < right; ++s) out.letters.push_back(offset + a + s);
  } else {
    // Inverse of the positive crossing of the swapped cables.
    for (int a = 1; a <= right; ++a)
      for (int s = left - 1; s >= 0; --s) out.letters.push_back(-(offset + a + s));
  }
  return out;
}

CabledBraid act_bottom(const DigitalBraid& g, const ExpansionForest& b) {
  if (b.source() != g.bottom()) throw MismatchError("act_bottom: forest source differs from bottom");
  const int n = static_cast<int>(g.top().size());
  Permutation perm = permutation_of(g.word());

  std::vector<ExpansionTree> up;
  up.reserve(n);
  for (int i = 0; i < n; ++i) up.push_back(b.trees()[perm.images[i]]);
  ExpansionForest transported(g.top(), std::move(up));

  // size[pos]: cable width of the strand currently at pos
  std::vector<int> size(n);
  for (int i = 0; i < n; ++i) size[i] = static_cast<int>(transported.trees()[i].leaf_count());
  const int total = std::max(1, std::accumulate(size.begin(), size.end(), 0));

  BraidWord word;
  word.strands = total;
  for (int a : g.word().letters) {
    int p = std::abs(a) - 1;
    int offset = std::accumulate(size.begin(), size.begin() + p, 0);
    BraidWord block = cable_crossing(offset, size[p], size[p + 1], a > 0 ? 1 : -1, total);
    word.letters.insert(word.letters.end(), block.letters.begin(), block.letters.end());
    std::swap(size[p], size[p + 1]);
  }
  DigitalBraid cabled(transported.leaves(), b.leaves(), std::move(word));
  return CabledBraid{std::move(transported), std::move(cabled)};
}

}  // namespace braidfrac
