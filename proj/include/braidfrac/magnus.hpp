#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidfrac/braid.hpp"
#include "braidfrac/digital_braid.hpp"

namespace braidfrac {

using BigInt = boost::multiprecision::cpp_int;

/// Element of the free group on x_1 .. x_rank; letter `j` is x_j, `-j` its inverse.
struct FreeWord {
  int rank = 0;
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord free_reduce(const FreeWord& w);
std::string format_free_word(const FreeWord& w);  // e.g. "x1 x2^-1"

/// Monomial order of the Magnus expansion: shorter first, then lexicographic
/// on generator indices.
struct MonomialLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Truncated non-commutative polynomial in X_1 .. X_r with integer
/// coefficients; zero coefficients are never stored.
struct NcPolynomial {
  int degree = 0;
  std::map<std::vector<int>, BigInt, MonomialLess> terms;

  static NcPolynomial one(int degree);
  BigInt coefficient(const std::vector<int>& monomial) const;
  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;
};

NcPolynomial nc_multiply(const NcPolynomial& a, const NcPolynomial& b);
std::string format_polynomial(const NcPolynomial& p);

/// Image of w under x_i -> 1 + X_i, truncated above `degree`.
NcPolynomial magnus_expand(const FreeWord& w, int degree);

constexpr int kDefaultDegreeCap = 16;

/// Magnus order: the sign of the first nonzero non-constant coefficient,
/// escalating the truncation degree up to `degree_cap` (BudgetExceeded past it).
Sign free_word_sign(const FreeWord& w, int degree_cap = kDefaultDegreeCap);

/// Artin combing of a pure braid on n strands. components[0] is the level-n
/// component (the loop of strand n around strands 1..n-1, a word of rank
/// n-1), components[1] the level n-1 component, and so on down to level 2.
struct CombedForm {
  int strands = 1;
  std::vector<FreeWord> components;

  bool trivial() const;
  friend bool operator==(const CombedForm&, const CombedForm&) = default;
};

/// Free generator x_j of level `level`: strand `level` passes under strands
/// j+1 .. level-1, winds once around strand j, and returns.
BraidWord loop_generator(int j, int level, int strands);

constexpr std::size_t kDefaultCombLengthCap = 4'000'000;

/// Throws std::invalid_argument for a non-pure braid and BudgetExceeded when
/// an intermediate free word grows past `length_cap` letters.
CombedForm comb(const BraidWord& pure, std::size_t length_cap = kDefaultCombLengthCap);
CombedForm comb(const DigitalBraid& g, std::size_t length_cap = kDefaultCombLengthCap);

/// Braid word for the product of the components (level n first); equal to
/// the combed braid as a braid element.
BraidWord reassemble(const CombedForm& c);

/// Lexicographic over the combed components, level 2 first, each by the
/// Magnus order. Throws std::invalid_argument for non-pure input.
Sign pure_braid_sign(const BraidWord& pure, int degree_cap = kDefaultDegreeCap);
Sign pure_braid_sign(const DigitalBraid& g, int degree_cap = kDefaultDegreeCap);

}  // namespace braidfrac
