#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "braidfrac/braid.hpp"
#include "braidfrac/digital_braid.hpp"
#include "braidfrac/drs.hpp"
#include "braidfrac/forest.hpp"
#include "braidfrac/magnus.hpp"
#include "braidfrac/plorder.hpp"

namespace braidfrac {

/// Which groupoid sits next to the expansions: all digital braids, pure ones,
/// bare permutations, or nothing.
enum class Flavor { Braided, PureBraided, Permutation, Plain };

const char* to_string(Flavor f);  // "braided" | "pure" | "permutation" | "plain"
/// Accepts the names above; throws std::invalid_argument otherwise.
Flavor parse_flavor(std::string_view name);

enum class Order { Less, Equal, Greater };
const char* to_string(Order o);  // "less" | "equal" | "greater"

struct GroupContext {
  std::shared_ptr<const DigitRewritingSystem> drs;
  Word base;
  Flavor flavor = Flavor::Braided;
  int degree_cap = kDefaultDegreeCap;
  std::size_t handle_budget = kDefaultHandleBudget;

  GroupContext() = default;
  /// Throws InvalidSystem when a base letter lies outside the alphabet.
  GroupContext(std::shared_ptr<const DigitRewritingSystem> drs, Word base, Flavor flavor);

  GroupContext with_flavor(Flavor f) const;
  /// Same system (by identity or by text), base and flavor.
  bool same_group(const GroupContext& other) const;
};

/// T g S^-1: T and S expand the base word, g runs from leaves(T) down to leaves(S).
class FractionElement {
 public:
  FractionElement() = default;
  /// Checks every flavor invariant (MismatchError / FlavorError). In the
  /// Permutation flavor the braid is replaced by a canonical word for its
  /// permutation; in the Plain flavor it must be trivial and is stored empty.
  FractionElement(GroupContext ctx, ExpansionForest t, DigitalBraid g, ExpansionForest s);

  static FractionElement identity(const GroupContext& ctx);

  const GroupContext& context() const { return ctx_; }
  const ExpansionForest& T() const { return t_; }
  const DigitalBraid& g() const { return g_; }
  const ExpansionForest& S() const { return s_; }

  /// Structural equality of the triple (not group equality).
  friend bool operator==(const FractionElement& a, const FractionElement& b) {
    return a.t_ == b.t_ && a.g_ == b.g_ && a.s_ == b.s_ && a.ctx_.same_group(b.ctx_);
  }

 private:
  GroupContext ctx_;
  ExpansionForest t_;
  DigitalBraid g_;
  ExpansionForest s_;
};

/// Throws MismatchError when the contexts differ.
FractionElement multiply(const FractionElement& a, const FractionElement& b);
FractionElement invert(const FractionElement& e);

bool is_identity(const FractionElement& e);
/// Group equality, via is_identity(a^-1 b).
bool group_equal(const FractionElement& a, const FractionElement& b);

/// Removes carets of T and S that meet through g as one unbraided cable.
FractionElement normalize(const FractionElement& e);

/// Left: the cone of braids with a nontrivial positive braid factor, ties
/// broken by the PL order on T S^-1. Bi (pure and plain flavors): the
/// semidirect order, PL order on T S^-1 first and the pure braid order only
/// when T = S. In the plain flavor both coincide.
enum class OrderMode { Left, Bi };

/// Throws FlavorError in the Permutation flavor, and for Bi in the Braided one.
Sign sign(const FractionElement& e, OrderMode mode = OrderMode::Left);
/// a < b iff a^-1 b is positive.
Order compare(const FractionElement& a, const FractionElement& b, OrderMode mode = OrderMode::Left);

/// T g S^-1 -> T S^-1 in the Plain flavor. Pure flavor only (FlavorError).
FractionElement psi_project(const FractionElement& e);
bool in_kernel_K(const FractionElement& e);
/// The pure element T S^-1 over `pure_ctx` for a Plain element T S^-1.
FractionElement section(const FractionElement& plain, const GroupContext& pure_ctx);

/// Deterministic in (context, budget, seed). T and S take at most `budget`
/// rule applications each. The braid has at most 2 * budget random letters,
/// followed in the braided flavors by a crossing pattern that brings equal
/// letters together when leaves(S) is a reordering of leaves(T).
FractionElement random_element(const GroupContext& ctx, int budget, std::uint64_t seed);

/// Random forest over `w` with exactly `steps` rule applications (fewer when
/// nothing is left to expand).
ExpansionForest random_forest(const DigitRewritingSystem& drs, const Word& w, int steps,
                              std::uint64_t seed);

/// Uniform letters sigma_i^{+-1}, exactly `length` of them.
BraidWord random_braid_word(int strands, int length, std::uint64_t seed);
/// Product of loop generators and conjugated squares, at most `max_length`
/// letters, freely reduced.
BraidWord random_pure_braid_word(int strands, int max_length, std::uint64_t seed);

}  // namespace braidfrac
