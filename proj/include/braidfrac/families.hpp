#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "braidfrac/digital_braid.hpp"
#include "braidfrac/drs.hpp"
#include "braidfrac/fraction.hpp"

namespace braidfrac {

/// x -> x^n with base "x". Throws InvalidSystem for n < 2.
DigitRewritingSystem thompson_drs(int n);

/// Letters x, y1 .. yn with yi -> yi x and base y1 .. yn. Throws InvalidSystem for n < 1.
DigitRewritingSystem houghton_drs(int n);

/// Directed multigraph; out[v] lists edge targets in the fixed edge order.
struct EdgeShiftGraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> base;  // empty: the first vertex
};

/// One letter per vertex, rule v -> targets for out-degree >= 2. A vertex of
/// out-degree 1 throws InvalidSystem.
DigitRewritingSystem edge_shift_drs(const EdgeShiftGraph& g);

/// Line format: `v -> w1 w2 ...` (targets in edge order, may be empty),
/// optional `base: v ...`, `#` comments. Vertices are numbered by first
/// appearance. Errors carry line and column.
EdgeShiftGraph parse_edge_shift(std::string_view text);

/// `thompson:<n>`, `houghton:<n>`, `edgeshift:<file>`, or a path to a DRS file.
std::shared_ptr<const DigitRewritingSystem> resolve_family(std::string_view family);

/// Type 1 braided-Houghton generator on `context`: swaps the x at 1-based
/// position `x_pos` with the adjacent y at `y_pos`. The x passes over the y
/// unless `x_over` is false. Throws MismatchError on a bad context.
DigitalBraid bh_type1(const DigitRewritingSystem& drs, const Word& context, int x_pos, int y_pos,
                      bool x_over = true);

/// Type 2 generator: `inner` embedded on the block of x letters right after y_ray
/// (the block must have inner.strands letters; an empty braid on an empty or
/// one-letter block is allowed), straight strands elsewhere.
DigitalBraid bh_type2(const DigitRewritingSystem& drs, const Word& context, int ray,
                      const BraidWord& inner);

/// Fractions for the generators over a Houghton base y1 .. yn:
/// bh1(i) (2 <= i <= n) carries one x from ray i-1 past y_i onto ray i;
/// bh2(i, inner) braids a block of inner.strands letters x on ray i.
FractionElement bh1_element(const GroupContext& ctx, int i, bool x_over = true);
FractionElement bh2_element(const GroupContext& ctx, int i, const BraidWord& inner);

}  // namespace braidfrac
