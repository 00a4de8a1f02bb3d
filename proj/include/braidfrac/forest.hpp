#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidfrac/drs.hpp"

namespace braidfrac {

/// One column of an expansion: a rooted tree whose expanded nodes carry the
/// children dictated by the node label's rule.
struct ExpansionTree {
  Letter label;
  std::vector<ExpansionTree> children;

  bool expanded() const { return !children.empty(); }
  std::size_t leaf_count() const;
  std::size_t internal_count() const;
  void append_leaves(Word& out) const;

  friend bool operator==(const ExpansionTree&, const ExpansionTree&) = default;
};

/// A morphism of the expansion category: one tree per letter of `source`.
/// Disjoint rewritings commute, so the forest is the canonical form of the
/// morphism and structural equality is morphism equality.
class ExpansionForest {
 public:
  ExpansionForest() = default;
  /// Throws MismatchError when the root labels do not spell `source`.
  ExpansionForest(Word source, std::vector<ExpansionTree> trees);

  static ExpansionForest identity(const Word& w);

  const Word& source() const { return source_; }
  const std::vector<ExpansionTree>& trees() const { return trees_; }

  Word leaves() const;
  std::size_t leaf_count() const;
  /// Number of rule applications.
  std::size_t size() const;
  bool is_identity() const { return size() == 0; }

  friend bool operator==(const ExpansionForest&, const ExpansionForest&) = default;

 private:
  Word source_;
  std::vector<ExpansionTree> trees_;
};

/// Applies the unique rule at 1-based position p1 of `source`, then at p2 of
/// the resulting word, and so on. Throws InvalidSystem for out-of-range
/// positions or letters without a rule.
ExpansionForest forest_from_steps(const DigitRewritingSystem& drs, const Word& source,
                                  const std::vector<int>& steps);

/// Canonical step sequence: nodes in preorder, each expanded at its position
/// in the partially expanded word. forest_from_steps inverts it.
std::vector<int> forest_steps(const ExpansionForest& f);

/// Checks that every expanded node follows its letter's rule.
bool forest_valid(const DigitRewritingSystem& drs, const ExpansionForest& f);

Word forest_leaves(const ExpansionForest& f);

/// The i-th leaf of `first` is replaced by the i-th tree of `second`.
/// Throws MismatchError unless leaves(first) == source(second).
ExpansionForest forest_graft(const ExpansionForest& first, const ExpansionForest& second);

/// The forest C with graft(lower, C) == upper. Throws MismatchError on a source
/// mismatch and NotUpperBound when `lower` is not a prefix of `upper`.
ExpansionForest forest_complement(const ExpansionForest& lower, const ExpansionForest& upper);

/// True when forest_complement(lower, upper) would succeed.
bool forest_below(const ExpansionForest& lower, const ExpansionForest& upper);

struct ForestJoin {
  ExpansionForest join;        // J
  ExpansionForest first_comp;  // B: graft(S, B) == J
  ExpansionForest second_comp; // A: graft(T, A) == J
};

/// Least common upper bound of two forests over the same source: the
/// node-wise union, with both complements.
ForestJoin forest_join(const ExpansionForest& s, const ExpansionForest& t);

/// Every forest over `w` with at most `depth` rule applications, each once,
/// in canonical-step order.
std::vector<ExpansionForest> enumerate_expansions(const DigitRewritingSystem& drs, const Word& w,
                                                  int depth);

/// Some forest over `source` whose leaves spell `target`, if one exists.
/// Used to attach fraction forests to an explicit context word.
std::optional<ExpansionForest> forest_from_leaves(const DigitRewritingSystem& drs,
                                                  const Word& source, const Word& target);

}  // namespace braidfrac
