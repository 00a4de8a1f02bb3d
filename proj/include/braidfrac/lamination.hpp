#pragma once

#include <cstdint>
#include <vector>

#include "braidfrac/braid.hpp"

namespace braidfrac {

/// Dynnikov coordinates (a_1, b_1, ..., a_n, b_n) of an integral lamination in
/// the n-punctured disk. Used only as an independent word-problem oracle.
struct LaminationCoords {
  std::vector<std::int64_t> values;  // a_1, b_1, a_2, b_2, ...

  static LaminationCoords initial(int strands);  // (0,1, 0,1, ...)
  friend bool operator==(const LaminationCoords&, const LaminationCoords&) = default;
};

/// Acts on `start` by the piecewise-linear Dynnikov formulas, one letter at a
/// time. Throws BudgetExceeded if a coordinate would overflow 64 bits.
LaminationCoords lamination_act(const BraidWord& w, LaminationCoords start);

/// lamination_act on the initial coordinates; equals initial(n) iff w is trivial.
LaminationCoords lamination_apply(const BraidWord& w);

bool lamination_trivial(const BraidWord& w);

}  // namespace braidfrac
