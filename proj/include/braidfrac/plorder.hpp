#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidfrac/braid.hpp"
#include "braidfrac/forest.hpp"

namespace braidfrac {

using Rational = boost::multiprecision::cpp_rational;

/// Orientation-preserving piecewise-linear homeomorphism [0, L_in] -> [0, L_out]
/// with rational breakpoints, affine between consecutive breakpoints.
/// Collinear breakpoints are pruned on construction, so equality is structural.
class PLMap {
 public:
  using Point = std::pair<Rational, Rational>;  // (input, output)

  PLMap() = default;
  /// Throws std::invalid_argument unless the points start at (0,0), increase
  /// strictly in both coordinates, and end at positive integers.
  explicit PLMap(std::vector<Point> breakpoints);

  static PLMap identity(const Rational& length);

  const std::vector<Point>& breakpoints() const { return points_; }
  const Rational& domain_end() const { return points_.back().first; }
  const Rational& range_end() const { return points_.back().second; }
  bool is_self_map() const { return domain_end() == range_end(); }
  bool is_identity() const;

  Rational operator()(const Rational& x) const;
  Rational preimage(const Rational& y) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<Point> points_;
};

/// Leaves of F subdivide the source letters' unit intervals into equal parts
/// per rule application; the map sends [0, |leaves|] onto [0, |source|].
PLMap realize_forest(const ExpansionForest& f);

/// x -> f(g(x)). Throws MismatchError unless range(g) == domain(f).
PLMap pl_compose(const PLMap& f, const PLMap& g);
PLMap pl_invert(const PLMap& f);

/// The self-map realize(T) o realize(S)^-1 of [0, |source|] representing T S^-1.
/// Throws MismatchError unless sources and leaves agree.
PLMap realize_pair(const ExpansionForest& t, const ExpansionForest& s);

/// Sign of the first-deviation order: positive when f(t) > t just right of the
/// leftmost point where f leaves the diagonal. Throws MismatchError for a
/// non-self-map.
Sign pl_sign(const PLMap& f);

/// Text form `(p/q,r/s) ...` with integers printed without a denominator.
std::string format_plmap(const PLMap& f);
std::string format_rational(const Rational& r);

}  // namespace braidfrac
