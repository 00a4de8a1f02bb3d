#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidfrac/errors.hpp"
#include "braidfrac/expression.hpp"
#include "braidfrac/families.hpp"

using namespace braidfrac;

namespace {

GroupContext context(const char* family, Flavor f) {
  auto drs = resolve_family(family);
  return GroupContext(drs, drs->base(), f);
}

std::pair<std::size_t, std::size_t> where(const GroupContext& ctx, const char* text) {
  try {
    parse_expression(ctx, text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("literals") {
  auto ctx = context("thompson:2", Flavor::Braided);
  auto e = parse_element(ctx, "frac T=[1,1] B=[1 -2] S=[1,2]");
  CHECK(forest_steps(e.T()) == std::vector<int>{1, 1});
  CHECK(e.g().word().letters == std::vector<int>{1, -2});
  CHECK(format_element(e) == "frac T=[1,1] B=[1 -2] S=[1,2]");
  // spaces and commas both separate
  CHECK(parse_element(ctx, "  frac T=[1 1] B=[1,-2] S=[ 1 , 2 ] ") == e);
  CHECK(format_element(FractionElement::identity(ctx)) == "frac T=[] B=[] S=[]");
  // steps are canonicalized
  CHECK(format_steps(parse_element(ctx, "frac T=[1,2,1] B=[] S=[1,1,1]").T()) == "[1,1,3]");
}

TEST_CASE("round trip on random elements") {
  for (Flavor f : {Flavor::Braided, Flavor::PureBraided, Flavor::Permutation, Flavor::Plain}) {
    for (const char* fam : {"thompson:2", "thompson:3", "houghton:3"}) {
      auto ctx = context(fam, f);
      for (std::uint64_t i = 0; i < 200; ++i) {
        auto e = random_element(ctx, 6, i);
        CHECK(parse_element(ctx, format_element(e)) == e);
      }
    }
  }
}

TEST_CASE("expressions") {
  auto ctx = context("thompson:2", Flavor::Braided);
  auto s1 = parse_element(ctx, "frac T=[1] B=[1] S=[1]");
  CHECK(parse_expression(ctx, "frac T=[1] B=[1] S=[1] * frac T=[1] B=[1] S=[1]") == multiply(s1, s1));
  CHECK(parse_expression(ctx, "inv(frac T=[1] B=[1] S=[1])") == invert(s1));
  CHECK(is_identity(parse_expression(ctx, "(frac T=[1] B=[1] S=[1]) * inv(frac T=[1] B=[1] S=[1])")));
  CHECK(parse_expression(ctx, "id") == FractionElement::identity(ctx));
  CHECK(parse_expression(ctx, "id * id * frac T=[1] B=[1] S=[1]") == s1);

  auto h = context("houghton:3", Flavor::Braided);
  CHECK(parse_expression(h, "bh1(2)") == bh1_element(h, 2));
  CHECK(parse_expression(h, "bh1(3, under)") == bh1_element(h, 3, false));
  CHECK(parse_expression(h, "bh2(1; 1 2)") == bh2_element(h, 1, BraidWord(3, {1, 2})));
  CHECK(parse_expression(h, "bh2(1, 4; 1 -2)") == bh2_element(h, 1, BraidWord(4, {1, -2})));
  CHECK(is_identity(parse_expression(h, "bh2(2;)")));
  CHECK(where(h, "bh2(2, 0;)") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(is_identity(parse_expression(h, "bh1(2) * inv(bh1(2))")));
}

TEST_CASE("errors carry positions") {
  auto ctx = context("thompson:2", Flavor::Braided);
  CHECK(where(ctx, "frac T=[1] B=[1 S=[1]") == std::pair<std::size_t, std::size_t>{1, 17});
  CHECK(where(ctx, "frac T=[1] B=[2] S=[1]") == std::pair<std::size_t, std::size_t>{1, 15});
  CHECK(where(ctx, "frac T=[1]\n  B=[1]\n  S=[9]") == std::pair<std::size_t, std::size_t>{3, 6});
  CHECK(where(ctx, "id id") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(where(ctx, "foo") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(where(ctx, "inv(id") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(where(ctx, "") == std::pair<std::size_t, std::size_t>{1, 1});
  // braid endpoints that do not match the forests
  CHECK(where(ctx, "frac T=[1] B=[] S=[]").first == 1);
  CHECK_THROWS_AS(parse_element(ctx, "id"), ParseError);
  auto h = context("houghton:3", Flavor::Braided);
  CHECK(where(h, "bh1(2, sideways)") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(where(h, "bh2(1, 2; 1 2)").first == 1);
  // flavor violations are not parse errors
  auto pure = context("thompson:2", Flavor::PureBraided);
  CHECK_THROWS_AS(parse_element(pure, "frac T=[1] B=[1] S=[1]"), FlavorError);
}

TEST_CASE("PL maps") {
  PLMap m = parse_plmap("(0,0) (1/2,1/4) (3/4,1/2) (1,1)");
  CHECK(format_plmap(m) == "(0,0) (1/2,1/4) (3/4,1/2) (1,1)");
  CHECK(m(Rational(1, 4)) == Rational(1, 8));
  // big rationals survive
  PLMap big = parse_plmap("(0,0) (1/340282366920938463463374607431768211456,1/3) (1,1)");
  CHECK(parse_plmap(format_plmap(big)) == big);
  CHECK_THROWS_AS(parse_plmap("(0,0) (1/0,1)"), ParseError);
  CHECK_THROWS_AS(parse_plmap("(0,0) (1,1"), ParseError);
  CHECK_THROWS_AS(parse_plmap("(0,0) (1,1) (1/2,2)"), ParseError);
}
