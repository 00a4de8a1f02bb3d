#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "braidfrac/errors.hpp"
#include "braidfrac/expression.hpp"
#include "braidfrac/families.hpp"

using namespace braidfrac;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "braidfrac_test_" + name;
  std::ofstream(path) << text;
  return path;
}

GroupContext houghton_ctx(int n, Flavor f = Flavor::Braided) {
  auto drs = std::make_shared<const DigitRewritingSystem>(houghton_drs(n));
  return GroupContext(drs, drs->base(), f);
}

}  // namespace

TEST_CASE("thompson systems") {
  auto t2 = thompson_drs(2);
  CHECK(t2.to_text() == "alphabet: x\nrule: x -> x x\nbase: x\n");
  auto t3 = thompson_drs(3);
  CHECK(t3.rule(t3.letter("x"))->rhs.size() == 3);
  CHECK_THROWS_AS(thompson_drs(1), InvalidSystem);
}

TEST_CASE("houghton systems") {
  auto h3 = houghton_drs(3);
  CHECK(h3.format(h3.base()) == "y1 y2 y3");
  CHECK(h3.format(h3.rule(h3.letter("y2"))->rhs) == "y2 x");
  CHECK_FALSE(h3.expands(h3.letter("x")));
  CHECK(houghton_drs(1).format(houghton_drs(1).base()) == "y1");
  CHECK_THROWS_AS(houghton_drs(0), InvalidSystem);

  // expansions of the base are determined by their leaves
  for (int depth = 0; depth <= 4; ++depth) {
    auto all = enumerate_expansions(h3, h3.base(), depth);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i].leaves() != all[j].leaves());
  }
}

TEST_CASE("edge shifts") {
  EdgeShiftGraph loop{{"x"}, {{0, 0}}, {}};
  CHECK(edge_shift_drs(loop).to_text() == thompson_drs(2).to_text());

  auto g = parse_edge_shift("# two vertices\na -> b b\nb -> a a\n");
  auto d = edge_shift_drs(g);
  CHECK(d.format(d.rule(d.letter("a"))->rhs) == "b b");
  CHECK(d.format(d.rule(d.letter("b"))->rhs) == "a a");
  CHECK(d.format(d.base()) == "a");

  auto sink = edge_shift_drs(parse_edge_shift("a -> a b c\nb ->\nc -> a b\nbase: c a\n"));
  CHECK_FALSE(sink.expands(sink.letter("b")));
  CHECK(sink.format(sink.base()) == "c a");

  EdgeShiftGraph single{{"a", "b"}, {{1}, {0, 0}}, {}};
  CHECK_THROWS_AS(edge_shift_drs(single), InvalidSystem);
  try {
    parse_edge_shift("a -> b b\nb -> a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_shift("a -> b b\nb => a a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_shift("a -> a a\nbase: a q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
}

TEST_CASE("family names") {
  CHECK(resolve_family("thompson:3")->to_text() == thompson_drs(3).to_text());
  CHECK(resolve_family("houghton:2")->to_text() == houghton_drs(2).to_text());
  std::string es = write_temp("shift.txt", "a -> b b\nb -> a a\n");
  CHECK(resolve_family("edgeshift:" + es)->rule_count() == 2);
  std::string drs = write_temp("sys.drs", "alphabet: x y\nrule: x -> x y\nrule: y -> x x y\nbase: y\n");
  CHECK(resolve_family(drs)->format(resolve_family(drs)->base()) == "y");
  std::remove(es.c_str());
  std::remove(drs.c_str());
  CHECK_THROWS_AS(resolve_family("thompson:two"), ParseError);
  CHECK_THROWS_AS(resolve_family("no/such/file"), Error);
}

TEST_CASE("type 1 generator") {
  auto h = houghton_drs(2);
  Word ctx = h.parse_word("y1 x y2");
  auto g = bh_type1(h, ctx, 2, 1);
  CHECK(g.word().letters == std::vector<int>{-1});
  CHECK(permutation_of(g.word()).images == std::vector<int>{1, 0, 2});
  CHECK(h.format(g.bottom()) == "x y1 y2");
  CHECK(bh_type1(h, ctx, 2, 1, false).word().letters == std::vector<int>{1});
  CHECK(bh_type1(h, ctx, 2, 3).word().letters == std::vector<int>{2});
  CHECK_THROWS_AS(bh_type1(h, ctx, 1, 2), MismatchError);
  CHECK_THROWS_AS(bh_type1(h, ctx, 1, 3), MismatchError);
}

TEST_CASE("type 2 generator") {
  auto h = houghton_drs(2);
  Word ctx = h.parse_word("y1 x x x y2");
  auto g = bh_type2(h, ctx, 1, BraidWord(3, {1, -2}));
  CHECK(g.word().letters == std::vector<int>{2, -3});
  CHECK(digital_equal(bh_type2(h, h.parse_word("y1 y2"), 2, BraidWord(1, {})),
                      DigitalBraid::trivial(h.parse_word("y1 y2"))));
  CHECK_THROWS_AS(bh_type2(h, ctx, 1, BraidWord(2, {1})), MismatchError);
}

TEST_CASE("generator fractions") {
  auto ctx = houghton_ctx(3);
  auto a = bh1_element(ctx, 2);
  CHECK(format_element(a) == "frac T=[1] B=[2] S=[2]");
  CHECK_THROWS_AS(bh1_element(ctx, 1), MismatchError);
  CHECK_THROWS_AS(bh1_element(ctx, 4), MismatchError);

  auto b = bh2_element(ctx, 3, BraidWord(2, {1}));
  CHECK(format_element(b) == "frac T=[3,3] B=[4] S=[3,3]");

  // generators living on different rays commute
  auto c = bh2_element(ctx, 1, BraidWord(3, {1, 2}));
  auto comm = multiply(multiply(b, c), invert(multiply(c, b)));
  CHECK(is_identity(comm));
  auto d = bh1_element(ctx, 2, false);
  CHECK(is_identity(multiply(multiply(b, d), invert(multiply(d, b)))));
  // over and under crossings differ
  CHECK_FALSE(group_equal(a, d));
  // whereas the bh1 pair on overlapping rays does not commute
  auto e = bh1_element(ctx, 3);
  CHECK_FALSE(is_identity(multiply(multiply(a, e), invert(multiply(e, a)))));
}

TEST_CASE("expanding a generator keeps it among generator products") {
  // cabling the y strand of a type 1 braid: the x crosses y and then the new
  // x, which is a type 1 braid followed by a type 2 braid on the x block
  auto h = houghton_drs(2);
  Word top = h.parse_word("y1 x y2");
  auto g = bh_type1(h, top, 2, 3);
  auto cab = act_bottom(g, forest_from_steps(h, g.bottom(), {2}));
  Word wide = cab.cabled.top();
  CHECK(h.format(wide) == "y1 x y2 x");
  auto expect = braid_compose(bh_type1(h, wide, 2, 3),
                              bh_type2(h, h.parse_word("y1 y2 x x"), 2, BraidWord(2, {1})));
  CHECK(digital_equal(cab.cabled, expect));
}
