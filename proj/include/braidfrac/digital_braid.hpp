#pragma once

#include "braidfrac/braid.hpp"
#include "braidfrac/drs.hpp"
#include "braidfrac/forest.hpp"

namespace braidfrac {

/// A braid whose endpoints carry letters; every strand joins two equal
/// letters. Read top to bottom: the strand from top position i ends at bottom
/// position permutation_of(word).images[i].
class DigitalBraid {
 public:
  DigitalBraid() = default;
  /// Throws MismatchError when lengths differ or a strand joins different letters.
  DigitalBraid(Word top, Word bottom, BraidWord word);

  static DigitalBraid trivial(const Word& w);
  /// Bottom word derived from the braid's permutation.
  static DigitalBraid from_top(Word top, BraidWord word);

  const Word& top() const { return top_; }
  const Word& bottom() const { return bottom_; }
  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands; }

  friend bool operator==(const DigitalBraid&, const DigitalBraid&) = default;

 private:
  Word top_;
  Word bottom_;
  BraidWord word_;
};

/// Gluing: a then b, freely reduced. Requires bottom(a) == top(b).
DigitalBraid braid_compose(const DigitalBraid& a, const DigitalBraid& b);
DigitalBraid braid_invert(const DigitalBraid& g);
/// The underlying braid with the labels forgotten.
BraidWord forget_digits(const DigitalBraid& g);
bool is_pure(const DigitalBraid& g);
/// Braid-element equality of the underlying braids plus equal endpoints.
bool digital_equal(const DigitalBraid& a, const DigitalBraid& b);

/// Word for one crossing between adjacent cables of `left` and `right`
/// strands, with `offset` strands to their left, on `total` strands. Every
/// strand of the left cable passes the right cable with crossings of `sign`.
BraidWord cable_crossing(int offset, int left, int right, int sign, int total);

struct CabledBraid {
  ExpansionForest transported;  // B moved to the top of g (g . B)
  DigitalBraid cabled;          // g with every strand cabled (g^B)
};

/// Pushes the expansion B (sourced at bottom(g)) through g: each strand is
/// replaced by as many parallel strands as its bottom tree has leaves, and the
/// trees are carried to the top along the strands, so that
/// g then B == transported then cabled.
CabledBraid act_bottom(const DigitalBraid& g, const ExpansionForest& b);

}  // namespace braidfrac
