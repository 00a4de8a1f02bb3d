#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidfrac/errors.hpp"
#include "braidfrac/lamination.hpp"
#include "braidfrac/magnus.hpp"

using namespace braidfrac;

namespace {

FreeWord fw(int rank, std::vector<int> letters) { return FreeWord{rank, std::move(letters)}; }

FreeWord random_free(int rank, int max_len, std::mt19937_64& rng) {
  FreeWord w{rank, {}};
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int k = 0; k < len; ++k) {
    int g = 1 + static_cast<int>(rng() % rank);
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

// Random pure braid: products of conjugated squares of generators.
BraidWord random_pure(int n, int factors, std::mt19937_64& rng) {
  BraidWord out(n, {});
  for (int f = 0; f < factors; ++f) {
    BraidWord u(n, {});
    int ulen = static_cast<int>(rng() % 4);
    for (int k = 0; k < ulen; ++k) {
      int i = 1 + static_cast<int>(rng() % (n - 1));
      u.letters.push_back(rng() % 2 ? i : -i);
    }
    int i = 1 + static_cast<int>(rng() % (n - 1));
    int e = rng() % 2 ? 1 : -1;
    BraidWord sq(n, {e * i, e * i});
    out = braid_concat(out, braid_concat(braid_concat(u, sq), braid_inverse(u)));
  }
  return out;
}

}  // namespace

TEST_CASE("expansions") {
  CHECK(magnus_expand(fw(1, {1, -1}), 5) == NcPolynomial::one(5));
  auto x1 = magnus_expand(fw(1, {1}), 2);
  CHECK(format_polynomial(x1) == "1 + X1");
  auto inv = magnus_expand(fw(1, {-1}), 3);
  CHECK(format_polynomial(inv) == "1 - X1 + X1X1 - X1X1X1");
  auto comm = magnus_expand(fw(2, {1, 2, -1, -2}), 2);
  CHECK(format_polynomial(comm) == "1 + X1X2 - X2X1");
  CHECK(comm.coefficient({1, 2}) == 1);
  CHECK(comm.coefficient({2, 1}) == -1);
  CHECK(comm.coefficient({1}) == 0);
}

TEST_CASE("expansion is multiplicative at every degree") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_free(3, 6, rng);
    auto v = random_free(3, 6, rng);
    int d = 1 + static_cast<int>(rng() % 5);
    FreeWord uv{3, u.letters};
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    CHECK(magnus_expand(uv, d) == nc_multiply(magnus_expand(u, d), magnus_expand(v, d)));
  }
}

TEST_CASE("free word signs") {
  CHECK(free_word_sign(fw(2, {})) == Sign::Zero);
  CHECK(free_word_sign(fw(2, {2, 1, -1, -2})) == Sign::Zero);
  CHECK(free_word_sign(fw(1, {1})) == Sign::Positive);
  CHECK(free_word_sign(fw(1, {-1})) == Sign::Negative);
  CHECK(free_word_sign(fw(2, {1, 2, -1, -2})) == Sign::Positive);
  CHECK(free_word_sign(fw(2, {2, 1, -2, -1})) == Sign::Negative);
  // x1 beats x2 at degree one
  CHECK(free_word_sign(fw(2, {-2, 1})) == Sign::Positive);
  CHECK_THROWS_AS(free_word_sign(fw(2, {1, 2, -1, -2}), 1), BudgetExceeded);
}

TEST_CASE("Magnus order is a bi-order on sampled words") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_free(3, 8, rng);
    auto b = random_free(3, 8, rng);
    auto c = random_free(3, 8, rng);
    Sign sa = free_word_sign(a);
    FreeWord ainv{3, {}};
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) ainv.letters.push_back(-*it);
    CHECK(free_word_sign(ainv) == negate(sa));
    CHECK((sa == Sign::Zero) == free_reduce(a).empty());
    FreeWord ab{3, a.letters};
    ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
    if (sa == Sign::Positive && free_word_sign(b) == Sign::Positive)
      CHECK(free_word_sign(ab) == Sign::Positive);
    FreeWord conj{3, c.letters};
    conj.letters.insert(conj.letters.end(), a.letters.begin(), a.letters.end());
    for (auto it = c.letters.rbegin(); it != c.letters.rend(); ++it) conj.letters.push_back(-*it);
    CHECK(free_word_sign(conj) == sa);
  }
}

TEST_CASE("combing the standard generators") {
  CHECK(comb(BraidWord(4, {})).trivial());
  auto c = comb(BraidWord(2, {1, 1}));
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].letters == std::vector<int>{1});
  CHECK(pure_braid_sign(BraidWord(2, {1, 1})) == Sign::Positive);
  CHECK(pure_braid_sign(BraidWord(2, {-1, -1})) == Sign::Negative);
  CHECK(pure_braid_sign(BraidWord(3, {})) == Sign::Zero);
  for (int n = 2; n <= 5; ++n)
    for (int level = 2; level <= n; ++level)
      for (int j = 1; j < level; ++j) {
        auto g = comb(loop_generator(j, level, n));
        for (int k = 0; k < static_cast<int>(g.components.size()); ++k) {
          if (n - k == level)
            CHECK(g.components[k].letters == std::vector<int>{j});
          else
            CHECK(g.components[k].empty());
        }
      }
  CHECK_THROWS_AS(comb(BraidWord(3, {1})), std::invalid_argument);
}

TEST_CASE("reassembly reproduces the braid") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord g = random_pure(n, 1 + static_cast<int>(rng() % 4), rng);
    CombedForm c = comb(g);
    BraidWord back = reassemble(c);
    CHECK(lamination_apply(back) == lamination_apply(g));
    CHECK(braid_equal(back, g));
    CHECK(c.trivial() == lamination_trivial(g));
    // components depend only on the braid element
    BraidWord padded = braid_concat(braid_concat(g, BraidWord(n, {1, -1})), BraidWord(n, {}));
    CHECK(comb(handle_reduce(g)) == c);
    CHECK(comb(padded) == c);
  }
}

TEST_CASE("pure braid order is a bi-order on samples") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord g = random_pure(n, 1 + static_cast<int>(rng() % 3), rng);
    BraidWord h = random_pure(n, 1 + static_cast<int>(rng() % 3), rng);
    Sign sg = pure_braid_sign(g);
    CHECK(pure_braid_sign(braid_inverse(g)) == negate(sg));
    CHECK((sg == Sign::Zero) == lamination_trivial(g));
    if (sg == Sign::Positive && pure_braid_sign(h) == Sign::Positive)
      CHECK(pure_braid_sign(braid_concat(g, h)) == Sign::Positive);
    CHECK(pure_braid_sign(braid_concat(braid_concat(h, g), braid_inverse(h))) == sg);
  }
}
