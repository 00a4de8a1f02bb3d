#include "braidfrac/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "braidfrac/errors.hpp"

namespace braidfrac {

DigitRewritingSystem thompson_drs(int n) {
  if (n < 2) throw InvalidSystem("thompson:" + std::to_string(n) + " needs arity at least 2");
  DigitRewritingSystem drs;
  Letter x = drs.add_letter("x");
  drs.add_rule(x, Word(static_cast<std::size_t>(n), x));
  drs.set_base({x});
  return drs;
}

DigitRewritingSystem houghton_drs(int n) {
  if (n < 1) throw InvalidSystem("houghton:" + std::to_string(n) + " needs at least one ray");
  DigitRewritingSystem drs;
  Letter x = drs.add_letter("x");
  Word base;
  for (int i = 1; i <= n; ++i) {
    Letter y = drs.add_letter("y" + std::to_string(i));
    drs.add_rule(y, {y, x});
    base.push_back(y);
  }
  drs.set_base(std::move(base));
  return drs;
}

DigitRewritingSystem edge_shift_drs(const EdgeShiftGraph& g) {
  if (g.vertices.empty()) throw InvalidSystem("edge shift without vertices");
  DigitRewritingSystem drs;
  for (const auto& v : g.vertices) drs.add_letter(v);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& targets = g.out.at(v);
    if (targets.empty()) continue;
    if (targets.size() == 1)
      throw InvalidSystem("vertex '" + g.vertices[v] +
                          "' has out-degree 1; rules need at least two letters");
    Word rhs;
    for (std::size_t t : targets) rhs.push_back(Letter{static_cast<std::uint32_t>(t)});
    drs.add_rule(Letter{static_cast<std::uint32_t>(v)}, std::move(rhs));
  }
  Word base;
  for (std::size_t b : g.base) base.push_back(Letter{static_cast<std::uint32_t>(b)});
  if (base.empty()) base.push_back(Letter{0});
  drs.set_base(std::move(base));
  return drs;
}

EdgeShiftGraph parse_edge_shift(std::string_view text) {
  EdgeShiftGraph g;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<bool> declared;
  auto vertex = [&](const std::string& name, std::size_t line, std::size_t col) {
    if (!valid_letter_name(name)) throw ParseError("invalid vertex name '" + name + "'", line, col);
    auto [it, fresh] = index.try_emplace(name, g.vertices.size());
    if (fresh) {
      g.vertices.push_back(name);
      g.out.emplace_back();
      declared.push_back(false);
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> base_tokens;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      tokens.emplace_back(std::string(line.substr(start, i - start)), start + 1);
    }
    if (tokens.empty()) continue;

    if (tokens[0].first == "base:") {
      if (tokens.size() == 1) throw ParseError("empty base", line_no, tokens[0].second);
      for (std::size_t i = 1; i < tokens.size(); ++i)
        base_tokens.push_back({tokens[i].first, {line_no, tokens[i].second}});
      continue;
    }
    if (tokens.size() < 2 || tokens[1].first != "->")
      throw ParseError("expected '<vertex> -> <vertex> ...'", line_no, tokens[0].second);
    std::size_t v = vertex(tokens[0].first, line_no, tokens[0].second);
    if (declared[v])
      throw ParseError("edges of '" + tokens[0].first + "' listed twice", line_no, tokens[0].second);
    declared[v] = true;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      std::size_t target = vertex(tokens[i].first, line_no, tokens[i].second);  // may grow g.out
      g.out[v].push_back(target);
    }
    if (g.out[v].size() == 1)
      throw ParseError("vertex '" + tokens[0].first +
                           "' has out-degree 1; rules need at least two letters",
                       line_no, tokens[0].second);
  }
  for (const auto& [name, where] : base_tokens) {
    auto it = index.find(name);
    if (it == index.end())
      throw ParseError("unknown vertex '" + name + "' in base", where.first, where.second);
    g.base.push_back(it->second);
  }
  if (g.vertices.empty()) throw ParseError("edge shift without vertices", 0, 0);
  return g;
}

namespace {

int parse_count(std::string_view family, std::string_view digits) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("bad number in family '" + std::string(family) + "'", 1,
                     static_cast<std::size_t>(digits.data() - family.data()) + 1);
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::shared_ptr<const DigitRewritingSystem> resolve_family(std::string_view family) {
  auto starts = [&](std::string_view p) { return family.substr(0, p.size()) == p; };
  if (starts("thompson:"))
    return std::make_shared<const DigitRewritingSystem>(thompson_drs(parse_count(family, family.substr(9))));
  if (starts("houghton:"))
    return std::make_shared<const DigitRewritingSystem>(houghton_drs(parse_count(family, family.substr(9))));
  if (starts("edgeshift:")) {
    std::string path(family.substr(10));
    return std::make_shared<const DigitRewritingSystem>(
        edge_shift_drs(parse_edge_shift(read_file(path))));
  }
  return std::make_shared<const DigitRewritingSystem>(parse_drs(read_file(std::string(family))));
}

DigitalBraid bh_type1(const DigitRewritingSystem& drs, const Word& context, int x_pos, int y_pos,
                      bool x_over) {
  const int n = static_cast<int>(context.size());
  if (x_pos < 1 || x_pos > n || y_pos < 1 || y_pos > n || std::abs(x_pos - y_pos) != 1)
    throw MismatchError("type 1 generator needs adjacent positions inside the context");
  if (drs.name(context[x_pos - 1]) != "x")
    throw MismatchError("type 1 generator: position " + std::to_string(x_pos) + " is not x");
  const std::string& y = drs.name(context[y_pos - 1]);
  if (y.size() < 2 || y[0] != 'y')
    throw MismatchError("type 1 generator: position " + std::to_string(y_pos) + " is not a ray letter");
  // sigma_i lifts the strand at i over the one at i+1
  const int i = std::min(x_pos, y_pos);
  const bool x_left = x_pos < y_pos;
  const int letter = (x_left == x_over) ? i : -i;
  return DigitalBraid::from_top(context, BraidWord(n, {letter}));
}

namespace {

int ray_position(const DigitRewritingSystem& drs, const Word& w, int ray) {
  auto y = drs.find("y" + std::to_string(ray));
  if (!y) throw MismatchError("no ray letter y" + std::to_string(ray));
  for (std::size_t p = 0; p < w.size(); ++p)
    if (w[p] == *y) return static_cast<int>(p);
  throw MismatchError("y" + std::to_string(ray) + " does not occur in the context");
}

}  // namespace

DigitalBraid bh_type2(const DigitRewritingSystem& drs, const Word& context, int ray,
                      const BraidWord& inner) {
  const int n = static_cast<int>(context.size());
  const int start = ray_position(drs, context, ray) + 1;
  auto x = drs.find("x");
  int len = 0;
  while (x && start + len < n && context[start + len] == *x) ++len;
  if (inner.empty() && inner.strands <= 1 && len <= 1) return DigitalBraid::trivial(context);
  if (len != inner.strands)
    throw MismatchError("type 2 generator: block after y" + std::to_string(ray) + " has " +
                        std::to_string(len) + " letters x, braid has " +
                        std::to_string(inner.strands) + " strands");
  BraidWord w(n, {});
  for (int a : inner.letters) w.letters.push_back(a > 0 ? a + start : a - start);
  return DigitalBraid::from_top(context, std::move(w));
}

FractionElement bh1_element(const GroupContext& ctx, int i, bool x_over) {
  const DigitRewritingSystem& drs = *ctx.drs;
  if (i < 2) throw MismatchError("bh1 needs a ray index of at least 2");
  int before = ray_position(drs, ctx.base, i - 1);
  int here = ray_position(drs, ctx.base, i);
  if (here != before + 1) throw MismatchError("bh1: y" + std::to_string(i - 1) + " and y" +
                                              std::to_string(i) + " are not adjacent in the base");
  ExpansionForest t = forest_from_steps(drs, ctx.base, {before + 1});
  ExpansionForest s = forest_from_steps(drs, ctx.base, {here + 1});
  DigitalBraid g = bh_type1(drs, t.leaves(), before + 2, before + 3, x_over);
  return FractionElement(ctx, std::move(t), std::move(g), std::move(s));
}

FractionElement bh2_element(const GroupContext& ctx, int i, const BraidWord& inner) {
  const DigitRewritingSystem& drs = *ctx.drs;
  int p = ray_position(drs, ctx.base, i);
  std::vector<int> steps(static_cast<std::size_t>(inner.strands), p + 1);
  ExpansionForest t = forest_from_steps(drs, ctx.base, steps);
  DigitalBraid g = bh_type2(drs, t.leaves(), i, inner);
  return FractionElement(ctx, t, std::move(g), t);
}

}  // namespace braidfrac
