#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "braidfrac/braid.hpp"
#include "braidfrac/errors.hpp"
#include "braidfrac/lamination.hpp"

using namespace braidfrac;

namespace {

BraidWord random_word(int n, int max_len, std::mt19937_64& rng) {
  BraidWord w;
  w.strands = n;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng() % (n - 1));
    w.letters.push_back(rng() % 2 ? i : -i);
  }
  return w;
}

// sigma_i-consistency of a reduced word: the least generator has one sign.
bool sigma_consistent(const BraidWord& w) {
  if (w.empty()) return true;
  int least = w.strands;
  for (int a : w.letters) least = std::min(least, std::abs(a));
  int sign = 0;
  for (int a : w.letters) {
    if (std::abs(a) != least) continue;
    int s = a > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

}  // namespace

TEST_CASE("handle reduction examples") {
  CHECK(handle_reduce(BraidWord(3, {})).empty());
  CHECK(handle_reduce(BraidWord(2, {1, -1})).empty());
  auto r = handle_reduce(BraidWord(3, {1, 2, -1, -2}));
  CHECK(format_braid_word(r) == "-2 1");
  CHECK(braid_equal(r, BraidWord(3, {1, 2, -1, -2})));
}

TEST_CASE("dehornoy sign examples") {
  CHECK(dehornoy_sign(BraidWord(3, {1, -2})) == Sign::Positive);
  CHECK(dehornoy_sign(BraidWord(2, {-1})) == Sign::Negative);
  CHECK(dehornoy_sign(BraidWord(3, {1, 2, -1, -2})) == Sign::Positive);
  CHECK(dehornoy_sign(BraidWord(3, {})) == Sign::Zero);
  // the full twist is a positive word
  CHECK(dehornoy_sign(BraidWord(3, {1, 2, 1, 1, 2, 1})) == Sign::Positive);
}

TEST_CASE("braid relations are recognized") {
  CHECK(braid_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK(braid_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(braid_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  CHECK(lamination_trivial(BraidWord(3, {1, 2, 1, -2, -1, -2})));
  CHECK(lamination_trivial(BraidWord(4, {1, 3, -1, -3})));
  CHECK_FALSE(lamination_trivial(BraidWord(3, {1, 2, -1, -2})));
  CHECK(lamination_apply(BraidWord(4, {})) == LaminationCoords::initial(4));
}

TEST_CASE("handle reduction agrees with the lamination oracle") {
  std::mt19937_64 rng(2024);
  int trivial_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    BraidWord w = random_word(n, 20, rng);
    // conjugates of w w^-1 are trivial but not freely trivial
    if (trial % 3 == 0) {
      BraidWord u = random_word(n, 6, rng);
      w = braid_concat(braid_concat(u, w), braid_concat(braid_inverse(w), braid_inverse(u)));
    }
    BraidWord r = handle_reduce(w);
    bool oracle = lamination_trivial(w);
    CHECK(r.empty() == oracle);
    trivial_seen += oracle;
    CHECK(sigma_consistent(r));
    CHECK(lamination_apply(r) == lamination_apply(w));
  }
  CHECK(trivial_seen > 500);
}

TEST_CASE("sign properties") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord u = random_word(n, 10, rng);
    BraidWord v = random_word(n, 10, rng);
    BraidWord c = random_word(n, 10, rng);
    Sign su = dehornoy_sign(u);
    CHECK(dehornoy_sign(braid_inverse(u)) == negate(su));
    CHECK((su == Sign::Zero) == lamination_trivial(u));
    if (su == Sign::Positive && dehornoy_sign(v) == Sign::Positive)
      CHECK(dehornoy_sign(braid_concat(u, v)) == Sign::Positive);
    // left invariance: (cu)^-1 (cv) = u^-1 v
    BraidWord lhs = braid_concat(braid_inverse(braid_concat(c, u)), braid_concat(c, v));
    CHECK(dehornoy_sign(lhs) == dehornoy_sign(braid_concat(braid_inverse(u), v)));
  }
}

TEST_CASE("permutations") {
  BraidWord w(4, {1, 2});
  // strand 1 goes over to position 3; strands 2, 3 shift left
  CHECK(permutation_of(w).images == std::vector<int>{2, 0, 1, 3});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = Permutation::identity(5);
    std::shuffle(p.images.begin(), p.images.end(), rng);
    CHECK(permutation_of(permutation_braid(p)) == p);
    CHECK(permutation_of(permutation_braid(p, -1)) == p);
    CHECK(permutation_of(permutation_braid(p)).inverse() == p.inverse());
  }
}

TEST_CASE("parse and format") {
  auto w = parse_braid_word("2 -1, 3", 4);
  CHECK(w.letters == std::vector<int>{2, -1, 3});
  CHECK(format_braid_word(w) == "2 -1 3");
  CHECK(parse_braid_word("", 3).empty());
  try {
    parse_braid_word("1 4", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_braid_word("1 x", 3), ParseError);
  CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
}

TEST_CASE("dropping a strand") {
  // sigma_1^2 on three strands with strand 1 removed is trivial
  BraidWord w(3, {1, 1, 2});
  std::vector<bool> drop{true, false, false};
  BraidWord d = drop_strands(w, drop);
  CHECK(d.strands == 2);
  CHECK(d.letters == std::vector<int>{1});
  // crossing numbers of the full twist: each pair crosses twice positively
  auto c = crossing_numbers(BraidWord(3, {1, 2, 1, 1, 2, 1}));
  CHECK(c[0][1] == 2);
  CHECK(c[0][2] == 2);
  CHECK(c[1][2] == 2);
}
