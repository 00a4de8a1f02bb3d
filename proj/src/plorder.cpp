#include "braidfrac/plorder.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidfrac/errors.hpp"

namespace braidfrac {

namespace {

bool collinear(const PLMap::Point& a, const PLMap::Point& b, const PLMap::Point& c) {
  return (b.second - a.second) * (c.first - b.first) == (c.second - b.second) * (b.first - a.first);
}

bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

// Value at x of the segment through a and b.
Rational lerp(const PLMap::Point& a, const PLMap::Point& b, const Rational& x) {
  return a.second + (b.second - a.second) * (x - a.first) / (b.first - a.first);
}

}  // namespace

PLMap::PLMap(std::vector<Point> pts) {
  if (pts.size() < 2) throw std::invalid_argument("PL map needs at least two breakpoints");
  if (pts.front().first != 0 || pts.front().second != 0)
    throw std::invalid_argument("PL map must start at (0,0)");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first <= pts[i - 1].first || pts[i].second <= pts[i - 1].second)
      throw std::invalid_argument("PL map breakpoints must increase strictly");
  if (!is_integer(pts.back().first) || !is_integer(pts.back().second))
    throw std::invalid_argument("PL map endpoints must be integers");

  points_.reserve(pts.size());
  for (auto& p : pts) {
    while (points_.size() >= 2 && collinear(points_[points_.size() - 2], points_.back(), p))
      points_.pop_back();
    points_.push_back(std::move(p));
  }
}

PLMap PLMap::identity(const Rational& length) {
  return PLMap({{Rational(0), Rational(0)}, {length, length}});
}

bool PLMap::is_identity() const {
  return points_.size() == 2 && points_.back().first == points_.back().second;
}

Rational PLMap::operator()(const Rational& x) const {
  if (x < 0 || x > domain_end()) throw std::out_of_range("PL map evaluated outside its domain");
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Point& p, const Rational& v) { return p.first < v; });
  if (it->first == x) return it->second;
  return lerp(*(it - 1), *it, x);
}

Rational PLMap::preimage(const Rational& y) const {
  if (y < 0 || y > range_end()) throw std::out_of_range("PL map inverted outside its range");
  auto it = std::lower_bound(points_.begin(), points_.end(), y,
                             [](const Point& p, const Rational& v) { return p.second < v; });
  if (it->second == y) return it->first;
  const Point& a = *(it - 1);
  const Point& b = *it;
  return a.first + (b.first - a.first) * (y - a.second) / (b.second - a.second);
}

namespace {

void realize_tree(const ExpansionTree& t, const Rational& lo, const Rational& hi,
                  std::vector<Rational>& right_ends) {
  if (!t.expanded()) {
    right_ends.push_back(hi);
    return;
  }
  const Rational width = (hi - lo) / static_cast<int>(t.children.size());
  for (std::size_t c = 0; c < t.children.size(); ++c)
    realize_tree(t.children[c], lo + width * static_cast<int>(c),
                 lo + width * static_cast<int>(c + 1), right_ends);
}

}  // namespace

PLMap realize_forest(const ExpansionForest& f) {
  std::vector<Rational> right_ends;
  for (std::size_t i = 0; i < f.trees().size(); ++i)
    realize_tree(f.trees()[i], Rational(static_cast<int>(i)), Rational(static_cast<int>(i + 1)),
                 right_ends);
  std::vector<PLMap::Point> pts;
  pts.reserve(right_ends.size() + 1);
  pts.emplace_back(0, 0);
  for (std::size_t j = 0; j < right_ends.size(); ++j)
    pts.emplace_back(Rational(static_cast<int>(j + 1)), right_ends[j]);
  if (pts.size() == 1) pts.emplace_back(1, 1);  // empty source: degenerate identity
  return PLMap(std::move(pts));
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
  if (g.range_end() != f.domain_end()) throw MismatchError("pl_compose: range/domain mismatch");
  std::vector<Rational> xs;
  xs.reserve(g.breakpoints().size() + f.breakpoints().size());
  for (const auto& p : g.breakpoints()) xs.push_back(p.first);
  for (const auto& p : f.breakpoints()) xs.push_back(g.preimage(p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLMap::Point> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.emplace_back(x, f(g(x)));
  return PLMap(std::move(pts));
}

PLMap pl_invert(const PLMap& f) {
  std::vector<PLMap::Point> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto& [x, y] : f.breakpoints()) pts.emplace_back(y, x);
  return PLMap(std::move(pts));
}

PLMap realize_pair(const ExpansionForest& t, const ExpansionForest& s) {
  if (t.source() != s.source()) throw MismatchError("realize_pair: sources differ");
  if (t.leaves() != s.leaves()) throw MismatchError("realize_pair: leaves differ");
  return pl_compose(realize_forest(t), pl_invert(realize_forest(s)));
}

Sign pl_sign(const PLMap& f) {
  if (!f.is_self_map()) throw MismatchError("pl_sign: not a self-map");
  const auto& pts = f.breakpoints();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Rational dx = pts[i].first - pts[i - 1].first;
    Rational dy = pts[i].second - pts[i - 1].second;
    if (dy > dx) return Sign::Positive;
    if (dy < dx) return Sign::Negative;
  }
  return Sign::Zero;
}

std::string format_rational(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string format_plmap(const PLMap& f) {
  std::string out;
  for (const auto& [x, y] : f.breakpoints()) {
    if (!out.empty()) out += ' ';
    out += "(" + format_rational(x) + "," + format_rational(y) + ")";
  }
  return out;
}

}  // namespace braidfrac
