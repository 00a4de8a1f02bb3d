#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace braidfrac {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
const char* to_string(Sign s);  // "positive" | "negative" | "zero"

/// A word in the Artin generators of B_n. Letter `i` is sigma_i, `-i` is its
/// inverse; sigma_i carries the strand at position i over the one at i+1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  /// Throws std::invalid_argument when a letter is 0 or |letter| >= strands.
  BraidWord(int strands, std::vector<int> letters);

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// images[i] is the 0-based bottom position of the strand starting at top
/// position i.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  bool is_identity() const;
  Permutation inverse() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation permutation_of(const BraidWord& w);

BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_inverse(const BraidWord& w);
/// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

constexpr std::size_t kDefaultHandleBudget = 1'000'000;

/// Dehornoy handle reduction. Repeatedly rewrites the handle whose closing
/// letter is leftmost (which is therefore innermost) until the word is
/// sigma-consistent. The result is empty iff the braid is trivial. Throws
/// BudgetExceeded after `budget` rewrites.
BraidWord handle_reduce(const BraidWord& w, std::size_t budget = kDefaultHandleBudget);

/// Sign of the least-index generator in the handle-reduced word.
Sign dehornoy_sign(const BraidWord& w, std::size_t budget = kDefaultHandleBudget);

bool braid_trivial(const BraidWord& w, std::size_t budget = kDefaultHandleBudget);
/// Equality of braid elements, decided by reducing a * b^-1.
bool braid_equal(const BraidWord& a, const BraidWord& b,
                 std::size_t budget = kDefaultHandleBudget);

/// Whitespace-separated signed integers, e.g. "2 -1". Commas are accepted as
/// separators. Throws ParseError with the 1-based column of a bad token.
BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_word(const BraidWord& w);

/// A word realizing `perm` by adjacent transpositions (bubble sort), every
/// crossing of sign `sign`.
BraidWord permutation_braid(const Permutation& perm, int sign = 1);

/// Removes the strands whose top positions are flagged, keeping every crossing
/// between two surviving strands with indices renumbered.
BraidWord drop_strands(const BraidWord& w, const std::vector<bool>& drop_top);

/// Per-pair signed crossing counts: entry [a][b] sums the signs of crossings
/// between the strands starting at top positions a and b.
std::vector<std::vector<int>> crossing_numbers(const BraidWord& w);

}  // namespace braidfrac
