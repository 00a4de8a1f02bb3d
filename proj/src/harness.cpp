#include "braidfrac/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "braidfrac/errors.hpp"
#include "braidfrac/expression.hpp"

namespace braidfrac {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "cone",      "left_invariance", "bi_invariance", "compatibility", "indirect_axioms",
      "same_sign", "semidirect",      "realization"};
  return names;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

struct Failure {
  std::string check;
  Values values;
};

// Per-trial environment: a stream of sub-seeds and the shared helpers.
class Trial {
 public:
  Trial(const GroupContext& ctx, const HarnessOptions& opt, std::uint64_t seed)
      : ctx(ctx), opt(opt), seed_(seed) {}

  std::uint64_t next() { return trial_seed(seed_, counter_++); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  FractionElement element() { return random_element(ctx, opt.budget, next()); }

  // Nonidentity element turned positive; nullopt if every draw was the identity.
  std::optional<FractionElement> positive_element() {
    for (int attempt = 0; attempt < 32; ++attempt) {
      FractionElement e = element();
      Sign s = sign(e);
      if (s == Sign::Positive) return e;
      if (s == Sign::Negative) return invert(e);
    }
    return std::nullopt;
  }

  ExpansionForest forest(const Word& w, int max_steps) {
    int steps = static_cast<int>(below(static_cast<std::uint64_t>(max_steps) + 1));
    return random_forest(*ctx.drs, w, steps, next());
  }

  const GroupContext& ctx;
  const HarnessOptions& opt;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

std::string lit(const FractionElement& e) { return format_element(e); }

Sign braid_sign(const GroupContext& ctx, const BraidWord& w) {
  switch (ctx.flavor) {
    case Flavor::Braided: return dehornoy_sign(w, ctx.handle_budget);
    case Flavor::PureBraided: return pure_braid_sign(w, ctx.degree_cap);
    default: return Sign::Zero;
  }
}

bool same_braid(const GroupContext& ctx, const DigitalBraid& a, const DigitalBraid& b) {
  if (ctx.flavor == Flavor::Permutation)
    return a.top() == b.top() && a.bottom() == b.bottom() &&
           permutation_of(a.word()) == permutation_of(b.word());
  return digital_equal(a, b);
}

Order reverse(Order o) {
  if (o == Order::Less) return Order::Greater;
  if (o == Order::Greater) return Order::Less;
  return o;
}

std::optional<Failure> cone(Trial& t) {
  FractionElement a = t.element();
  FractionElement b = t.element();
  FractionElement ab = multiply(a, b);
  for (const auto* x : {&a, &b, &ab}) {
    Sign s = sign(*x);
    if ((s == Sign::Zero) != is_identity(*x)) return Failure{"trichotomy", {{"e", lit(*x)}}};
    if (sign(invert(*x)) != negate(s)) return Failure{"disjointness", {{"e", lit(*x)}}};
  }
  auto pa = t.positive_element();
  auto pb = t.positive_element();
  // only the identity turned up, as in groups that are trivial
  if (!pa || !pb) return std::nullopt;
  if (sign(multiply(*pa, *pb)) != Sign::Positive)
    return Failure{"closure", {{"a", lit(*pa)}, {"b", lit(*pb)}}};
  return std::nullopt;
}

std::optional<Failure> left_invariance(Trial& t) {
  FractionElement a = t.element();
  FractionElement b = t.element();
  FractionElement c = t.element();
  Values v = {{"a", lit(a)}, {"b", lit(b)}, {"c", lit(c)}};
  Order o = compare(a, b);
  if (compare(b, a) != reverse(o)) return Failure{"antisymmetry", v};
  if (compare(multiply(c, a), multiply(c, b)) != o) return Failure{"left", v};
  return std::nullopt;
}

std::optional<Failure> bi_invariance(Trial& t) {
  constexpr auto bi = OrderMode::Bi;
  FractionElement a = t.element();
  FractionElement b = t.element();
  FractionElement c = t.element();
  Values v = {{"a", lit(a)}, {"b", lit(b)}, {"c", lit(c)}};
  Order o = compare(a, b, bi);
  if (compare(b, a, bi) != reverse(o)) return Failure{"antisymmetry", v};
  if (compare(multiply(c, a), multiply(c, b), bi) != o) return Failure{"left", v};
  if (compare(multiply(a, c), multiply(b, c), bi) != o) return Failure{"right", v};
  if (sign(multiply(multiply(c, a), invert(c)), bi) != sign(a, bi)) return Failure{"conjugation", v};
  // random pairs rarely tie on T S^-1, so push a through the kernel as well
  if (t.ctx.flavor == Flavor::PureBraided) {
    FractionElement k = multiply(a, invert(section(psi_project(a), t.ctx)));
    v.push_back({"k", lit(k)});
    if (sign(multiply(multiply(c, k), invert(c)), bi) != sign(k, bi))
      return Failure{"kernel_conjugation", v};
  }
  return std::nullopt;
}

std::optional<Failure> compatibility(Trial& t) {
  const DigitRewritingSystem& drs = *t.ctx.drs;
  for (int attempt = 0; attempt < 200; ++attempt) {
    FractionElement e = t.element();
    Sign s = braid_sign(t.ctx, e.g().word());
    if (s == Sign::Zero) continue;
    if (s == Sign::Negative) e = invert(e);
    const Word& bottom = e.g().bottom();
    std::vector<int> open;
    for (std::size_t i = 0; i < bottom.size(); ++i)
      if (drs.expands(bottom[i])) open.push_back(static_cast<int>(i) + 1);
    if (open.empty()) continue;
    ExpansionForest b = forest_from_steps(drs, bottom, {open[t.below(open.size())]});
    CabledBraid r = act_bottom(e.g(), b);
    if (braid_sign(t.ctx, r.cabled.word()) != Sign::Positive)
      return Failure{"cabled_positive", {{"e", lit(e)}, {"B", format_steps(b)}}};
    return std::nullopt;
  }
  return Failure{"sampling", {}};
}

std::optional<Failure> indirect_axioms(Trial& t) {
  const GroupContext& ctx = t.ctx;
  FractionElement e = t.element();
  const DigitalBraid& g2 = e.g();
  ExpansionForest b1 = t.forest(g2.bottom(), 3);
  ExpansionForest b2 = t.forest(b1.leaves(), 3);
  Values v = {{"e", lit(e)}, {"B1", format_steps(b1)}, {"B2", format_steps(b2)}};

  CabledBraid whole = act_bottom(g2, forest_graft(b1, b2));
  CabledBraid first = act_bottom(g2, b1);
  CabledBraid second = act_bottom(first.cabled, b2);
  if (!same_braid(ctx, whole.cabled, second.cabled)) return Failure{"cable_of_graft", v};
  if (whole.transported != forest_graft(first.transported, second.transported))
    return Failure{"transport_of_graft", v};

  // g1 ends where g2 starts
  const int n = g2.strands();
  BraidWord w = ctx.flavor == Flavor::PureBraided
                    ? random_pure_braid_word(n, 2 * t.opt.budget, t.next())
                    : random_braid_word(n, static_cast<int>(t.below(2 * t.opt.budget + 1)), t.next());
  if (ctx.flavor == Flavor::Plain) w.letters.clear();
  DigitalBraid g1 = braid_invert(DigitalBraid::from_top(g2.top(), w));
  v.push_back({"g1", "[" + format_braid_word(g1.word()) + "]"});
  CabledBraid prod = act_bottom(braid_compose(g1, g2), b1);
  CabledBraid lower = act_bottom(g2, b1);
  CabledBraid upper = act_bottom(g1, lower.transported);
  if (!same_braid(ctx, prod.cabled, braid_compose(upper.cabled, lower.cabled)))
    return Failure{"cable_of_product", v};
  if (prod.transported != upper.transported) return Failure{"transport_of_product", v};

  // group axioms
  FractionElement a = t.element();
  FractionElement c = t.element();
  Values gv = {{"a", lit(a)}, {"b", lit(e)}, {"c", lit(c)}};
  if (!group_equal(multiply(multiply(a, e), c), multiply(a, multiply(e, c))))
    return Failure{"associativity", gv};
  FractionElement one = FractionElement::identity(ctx);
  if (!group_equal(multiply(a, one), a) || !group_equal(multiply(one, a), a))
    return Failure{"identity", gv};
  if (!is_identity(multiply(a, invert(a))) || !is_identity(multiply(invert(a), a)))
    return Failure{"inverse", gv};
  return std::nullopt;
}

std::optional<Failure> same_sign(Trial& t) {
  const GroupContext& ctx = t.ctx;
  FractionElement e = t.element();
  Sign braid0 = braid_sign(ctx, e.g().word());
  Sign full0 = sign(e);
  for (int r = 0; r < 3; ++r) {
    ExpansionForest p = t.forest(e.S().leaves(), 3);
    CabledBraid cab = act_bottom(e.g(), p);
    FractionElement padded(ctx, forest_graft(e.T(), cab.transported), cab.cabled,
                           forest_graft(e.S(), p));
    Values v = {{"e", lit(e)}, {"P", format_steps(p)}, {"padded", lit(padded)}};
    if (braid_sign(ctx, padded.g().word()) != braid0) return Failure{"braid_sign", v};
    if (sign(padded) != full0) return Failure{"sign", v};
    if (!group_equal(padded, e)) return Failure{"same_element", v};
  }
  return std::nullopt;
}

std::optional<Failure> semidirect(Trial& t) {
  const GroupContext& ctx = t.ctx;
  FractionElement e = t.element();
  FractionElement s = section(psi_project(e), ctx);
  FractionElement k = multiply(e, invert(s));
  Values v = {{"e", lit(e)}, {"k", lit(k)}, {"s", lit(s)}};
  if (!in_kernel_K(k)) return Failure{"kernel", v};
  if (!group_equal(multiply(k, s), e)) return Failure{"decomposition", v};
  if (!group_equal(psi_project(s), psi_project(e))) return Failure{"projection", v};

  FractionElement f = t.element();
  v.push_back({"f", lit(f)});
  if (!group_equal(psi_project(multiply(e, f)), multiply(psi_project(e), psi_project(f))))
    return Failure{"homomorphism", v};
  if (!in_kernel_K(multiply(multiply(f, k), invert(f)))) return Failure{"normal", v};
  FractionElement k2 = multiply(f, invert(section(psi_project(f), ctx)));
  if (!in_kernel_K(multiply(k, k2))) return Failure{"closed", v};
  return std::nullopt;
}

std::optional<Failure> realization(Trial& t) {
  const GroupContext& ctx = t.ctx;
  const int depth = t.opt.budget;
  ExpansionForest f = t.forest(ctx.base, depth);
  ExpansionForest g = t.forest(f.leaves(), depth);
  if (realize_forest(forest_graft(f, g)) != pl_compose(realize_forest(f), realize_forest(g)))
    return Failure{"functorial", {{"F", format_steps(f)}, {"G", format_steps(g)}}};
  // faithfulness needs a pair with equal leaves and different shapes
  for (int attempt = 0; attempt < 64; ++attempt) {
    int k = static_cast<int>(1 + t.below(static_cast<std::uint64_t>(depth)));
    ExpansionForest a = random_forest(*ctx.drs, ctx.base, k, t.next());
    ExpansionForest b = random_forest(*ctx.drs, ctx.base, k, t.next());
    if (a == b || a.leaves() != b.leaves()) continue;
    PLMap m = realize_pair(a, b);
    if (m.is_identity() || pl_sign(m) == Sign::Zero)
      return Failure{"faithful", {{"T", format_steps(a)}, {"S", format_steps(b)}}};
    break;
  }
  return std::nullopt;
}

void require_flavor(std::string_view suite, const GroupContext& ctx, std::initializer_list<Flavor> ok) {
  if (std::find(ok.begin(), ok.end(), ctx.flavor) == ok.end())
    throw FlavorError("suite " + std::string(suite) + " does not apply to the " +
                      to_string(ctx.flavor) + " flavor");
}

}  // namespace

Report run_suite(std::string_view suite, const GroupContext& ctx, std::size_t trials,
                 std::uint64_t seed, const HarnessOptions& options) {
  std::function<std::optional<Failure>(Trial&)> body;
  constexpr auto B = Flavor::Braided;
  constexpr auto P = Flavor::PureBraided;
  constexpr auto N = Flavor::Plain;
  constexpr auto Q = Flavor::Permutation;
  if (suite == "cone") {
    require_flavor(suite, ctx, {B, P, N});
    body = cone;
  } else if (suite == "left_invariance") {
    require_flavor(suite, ctx, {B, P, N});
    body = left_invariance;
  } else if (suite == "bi_invariance") {
    require_flavor(suite, ctx, {P, N});
    body = bi_invariance;
  } else if (suite == "compatibility") {
    require_flavor(suite, ctx, {B, P});
    body = compatibility;
  } else if (suite == "indirect_axioms") {
    require_flavor(suite, ctx, {B, P, N, Q});
    body = indirect_axioms;
  } else if (suite == "same_sign") {
    require_flavor(suite, ctx, {B, P, N});
    body = same_sign;
  } else if (suite == "semidirect") {
    require_flavor(suite, ctx, {P});
    body = semidirect;
  } else if (suite == "realization") {
    body = realization;
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }

  Report r;
  r.suite = std::string(suite);
  r.trials = trials;
  r.seed = seed;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < trials; ++i) {
    Trial trial(ctx, options, trial_seed(seed, i));
    std::optional<Failure> f;
    try {
      f = body(trial);
    } catch (const std::exception& ex) {
      f = Failure{"error", {{"message", ex.what()}}};
    }
    if (!f) continue;
    ++r.failures;
    if (!r.first) r.first = Counterexample{i, f->check, f->values};
  }
  r.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

std::string report_format(const Report& r) {
  std::string out = "suite=" + r.suite + " trials=" + std::to_string(r.trials) +
                    " failures=" + std::to_string(r.failures) + " seed=" + std::to_string(r.seed) +
                    " time_ms=" + std::to_string(r.time_ms) + "\n";
  if (r.first) {
    out += "counterexample: trial=" + std::to_string(r.first->trial) + " check=" + r.first->check + "\n";
    for (const auto& [name, value] : r.first->values) out += "  " + name + ": " + value + "\n";
  }
  return out;
}

}  // namespace braidfrac
