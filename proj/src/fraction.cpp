#include "braidfrac/fraction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "braidfrac/errors.hpp"

namespace braidfrac {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Braided: return "braided";
    case Flavor::PureBraided: return "pure";
    case Flavor::Permutation: return "permutation";
    case Flavor::Plain: return "plain";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "braided") return Flavor::Braided;
  if (name == "pure") return Flavor::PureBraided;
  if (name == "permutation") return Flavor::Permutation;
  if (name == "plain") return Flavor::Plain;
  throw std::invalid_argument("unknown flavor '" + std::string(name) +
                              "' (expected braided, pure, permutation or plain)");
}

const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
  }
  return "?";
}

GroupContext::GroupContext(std::shared_ptr<const DigitRewritingSystem> d, Word b, Flavor f)
    : drs(std::move(d)), base(std::move(b)), flavor(f) {
  if (!drs) throw InvalidSystem("group context without a rewriting system");
  for (Letter l : base)
    if (index_of(l) >= drs->alphabet_size()) throw InvalidSystem("base letter outside the alphabet");
}

GroupContext GroupContext::with_flavor(Flavor f) const {
  GroupContext out = *this;
  out.flavor = f;
  return out;
}

bool GroupContext::same_group(const GroupContext& other) const {
  if (flavor != other.flavor || base != other.base) return false;
  if (drs == other.drs) return true;
  return drs && other.drs && drs->to_text() == other.drs->to_text();
}

namespace {

BraidWord canonical_permutation_word(const BraidWord& w) {
  return permutation_braid(permutation_of(w), 1);
}

}  // namespace

FractionElement::FractionElement(GroupContext ctx, ExpansionForest t, DigitalBraid g,
                                 ExpansionForest s)
    : ctx_(std::move(ctx)), t_(std::move(t)), g_(std::move(g)), s_(std::move(s)) {
  if (t_.source() != ctx_.base || s_.source() != ctx_.base)
    throw MismatchError("fraction forests must expand the base word");
  if (!forest_valid(*ctx_.drs, t_) || !forest_valid(*ctx_.drs, s_))
    throw MismatchError("fraction forest does not follow the rewriting rules");
  if (g_.top() != t_.leaves()) throw MismatchError("braid top differs from the leaves of T");
  if (g_.bottom() != s_.leaves()) throw MismatchError("braid bottom differs from the leaves of S");
  switch (ctx_.flavor) {
    case Flavor::Braided:
      break;
    case Flavor::PureBraided:
      if (!is_pure(g_)) throw FlavorError("pure flavor requires a pure braid");
      break;
    case Flavor::Permutation:
      g_ = DigitalBraid(g_.top(), g_.bottom(), canonical_permutation_word(g_.word()));
      break;
    case Flavor::Plain:
      if (!braid_trivial(g_.word(), ctx_.handle_budget))
        throw FlavorError("plain flavor requires a trivial braid");
      g_ = DigitalBraid::trivial(g_.top());
      break;
  }
}

FractionElement FractionElement::identity(const GroupContext& ctx) {
  auto id = ExpansionForest::identity(ctx.base);
  return FractionElement(ctx, id, DigitalBraid::trivial(ctx.base), id);
}

FractionElement multiply(const FractionElement& a, const FractionElement& b) {
  if (!a.context().same_group(b.context())) throw MismatchError("multiply: elements of different groups");
  ForestJoin j = forest_join(a.S(), b.T());
  CabledBraid lower = act_bottom(a.g(), j.first_comp);
  CabledBraid upper = act_bottom(braid_invert(b.g()), j.second_comp);
  return FractionElement(a.context(), forest_graft(a.T(), lower.transported),
                         braid_compose(lower.cabled, braid_invert(upper.cabled)),
                         forest_graft(b.S(), upper.transported));
}

FractionElement invert(const FractionElement& e) {
  return FractionElement(e.context(), e.S(), braid_invert(e.g()), e.T());
}

bool is_identity(const FractionElement& e) {
  return e.T() == e.S() && braid_trivial(e.g().word(), e.context().handle_budget);
}

bool group_equal(const FractionElement& a, const FractionElement& b) {
  return is_identity(multiply(invert(a), b));
}

namespace {

// Leaf index where each caret with only leaf children starts.
void caret_starts(const ExpansionTree& t, std::size_t& leaf, std::vector<std::size_t>& out) {
  if (!t.expanded()) {
    ++leaf;
    return;
  }
  bool bottom = std::none_of(t.children.begin(), t.children.end(),
                             [](const ExpansionTree& c) { return c.expanded(); });
  if (bottom) {
    out.push_back(leaf);
    leaf += t.children.size();
    return;
  }
  for (const auto& c : t.children) caret_starts(c, leaf, out);
}

std::vector<std::size_t> caret_starts(const ExpansionForest& f) {
  std::vector<std::size_t> out;
  std::size_t leaf = 0;
  for (const auto& t : f.trees()) caret_starts(t, leaf, out);
  return out;
}

bool prune_caret(ExpansionTree& t, std::size_t& leaf, std::size_t start) {
  if (!t.expanded()) {
    ++leaf;
    return false;
  }
  if (leaf == start && std::none_of(t.children.begin(), t.children.end(),
                                    [](const ExpansionTree& c) { return c.expanded(); })) {
    t.children.clear();
    return true;
  }
  for (auto& c : t.children)
    if (prune_caret(c, leaf, start)) return true;
  return false;
}

ExpansionForest prune_caret(const ExpansionForest& f, std::size_t start) {
  std::vector<ExpansionTree> trees = f.trees();
  std::size_t leaf = 0;
  for (auto& t : trees)
    if (prune_caret(t, leaf, start)) break;
  return ExpansionForest(f.source(), std::move(trees));
}

std::size_t caret_width(const ExpansionForest& f, std::size_t start) {
  ExpansionForest pruned = prune_caret(f, start);
  return f.leaf_count() - pruned.leaf_count() + 1;
}

// Tries to cancel the caret of T starting at leaf `a` against the caret of S
// its strands land on.
bool try_cancel(const FractionElement& e, std::size_t a, FractionElement& out) {
  const std::size_t k = caret_width(e.T(), a);
  Permutation p = permutation_of(e.g().word());
  const std::size_t b = static_cast<std::size_t>(p.images[a]);
  for (std::size_t i = 1; i < k; ++i)
    if (static_cast<std::size_t>(p.images[a + i]) != b + i) return false;
  auto s_carets = caret_starts(e.S());
  if (std::find(s_carets.begin(), s_carets.end(), b) == s_carets.end()) return false;
  if (caret_width(e.S(), b) != k) return false;

  ExpansionForest t2 = prune_caret(e.T(), a);
  ExpansionForest s2 = prune_caret(e.S(), b);
  // the words of both forests agree on the parent letter: the strands carry it
  std::vector<bool> drop(e.g().top().size(), false);
  for (std::size_t i = 1; i < k; ++i) drop[a + i] = true;
  BraidWord reduced = drop_strands(e.g().word(), drop);
  if (reduced.strands != static_cast<int>(std::max<std::size_t>(t2.leaf_count(), 1))) return false;
  DigitalBraid g2;
  try {
    g2 = DigitalBraid(t2.leaves(), s2.leaves(), reduced);
  } catch (const MismatchError&) {
    return false;
  }
  // the cable must be unbraided: re-cabling must give back g
  std::vector<int> steps = {static_cast<int>(b) + 1};
  ExpansionForest caret = forest_from_steps(*e.context().drs, s2.leaves(), steps);
  if (caret.leaves() != e.S().leaves()) return false;
  CabledBraid back = act_bottom(g2, caret);
  if (forest_graft(t2, back.transported) != e.T()) return false;
  if (e.context().flavor == Flavor::Permutation) {
    if (permutation_of(back.cabled.word()) != permutation_of(e.g().word())) return false;
  } else if (!digital_equal(back.cabled, e.g())) {
    return false;
  }
  out = FractionElement(e.context(), t2, g2, s2);
  return true;
}

}  // namespace

FractionElement normalize(const FractionElement& e) {
  FractionElement cur = e;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a : caret_starts(cur.T())) {
      FractionElement next;
      if (try_cancel(cur, a, next)) {
        cur = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

Sign sign(const FractionElement& e, OrderMode mode) {
  const GroupContext& ctx = e.context();
  if (ctx.flavor == Flavor::Permutation)
    throw FlavorError(
        "no order on the permutation flavor: groups of permutation fractions are not orderable "
        "since they have torsion");
  if (mode == OrderMode::Bi) {
    if (ctx.flavor == Flavor::Braided)
      throw FlavorError("the bi-order is defined for the pure and plain flavors only");
    // K x| Pi(F): the quotient decides, the braid only breaks ties inside K
    Sign q = pl_sign(realize_pair(e.T(), e.S()));
    if (q != Sign::Zero || ctx.flavor == Flavor::Plain) return q;
    return pure_braid_sign(e.g().word(), ctx.degree_cap);
  }
  switch (ctx.flavor) {
    case Flavor::Braided: {
      BraidWord r = handle_reduce(e.g().word(), ctx.handle_budget);
      if (!r.empty()) return dehornoy_sign(r, ctx.handle_budget);
      break;
    }
    case Flavor::PureBraided: {
      Sign s = pure_braid_sign(e.g().word(), ctx.degree_cap);
      if (s != Sign::Zero) return s;
      break;
    }
    default:
      break;
  }
  return pl_sign(realize_pair(e.T(), e.S()));
}

Order compare(const FractionElement& a, const FractionElement& b, OrderMode mode) {
  switch (sign(multiply(invert(a), b), mode)) {
    case Sign::Positive: return Order::Less;
    case Sign::Negative: return Order::Greater;
    case Sign::Zero: break;
  }
  return Order::Equal;
}

FractionElement psi_project(const FractionElement& e) {
  if (e.context().flavor != Flavor::PureBraided)
    throw FlavorError("psi_project is defined for the pure flavor only");
  return FractionElement(e.context().with_flavor(Flavor::Plain), e.T(),
                         DigitalBraid::trivial(e.T().leaves()), e.S());
}

bool in_kernel_K(const FractionElement& e) { return is_identity(psi_project(e)); }

FractionElement section(const FractionElement& plain, const GroupContext& pure_ctx) {
  if (plain.context().flavor != Flavor::Plain || pure_ctx.flavor != Flavor::PureBraided)
    throw FlavorError("section maps plain elements into the pure flavor");
  return FractionElement(pure_ctx, plain.T(), plain.g(), plain.S());
}

namespace {

// Platform-independent draws (std distributions are implementation-defined).
struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng() % n; }
  int upto(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n) + 1)); }
  bool coin() { return rng() & 1; }
};

std::vector<int> random_steps(const DigitRewritingSystem& drs, const Word& w, int steps, Draw& d) {
  std::vector<int> out;
  Word cur = w;
  for (int k = 0; k < steps; ++k) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (drs.expands(cur[i])) open.push_back(i);
    if (open.empty()) break;
    std::size_t p = open[d.below(open.size())];
    out.push_back(static_cast<int>(p) + 1);
    const Word& rhs = drs.rule(cur[p])->rhs;
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p));
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(p), rhs.begin(), rhs.end());
  }
  return out;
}

BraidWord random_braid_word(int n, int length, Draw& d) {
  BraidWord w(n, {});
  if (n < 2) return w;
  for (int k = 0; k < length; ++k) {
    int i = 1 + static_cast<int>(d.below(n - 1));
    w.letters.push_back(d.coin() ? i : -i);
  }
  return w;
}

BraidWord random_pure_word(int n, int max_length, Draw& d) {
  BraidWord w(n, {});
  if (n < 2) return w;
  int target = d.upto(max_length);
  for (int guard = 0; guard < 4 * max_length + 4; ++guard) {
    int room = target - static_cast<int>(w.letters.size());
    if (room < 2) break;
    BraidWord factor;
    if (d.coin()) {
      int level = 2 + static_cast<int>(d.below(n - 1));
      int j = 1 + static_cast<int>(d.below(level - 1));
      factor = loop_generator(j, level, n);
      if (d.coin()) factor = braid_inverse(factor);
    } else {
      BraidWord u = random_braid_word(n, d.upto((room - 2) / 2), d);
      int i = 1 + static_cast<int>(d.below(n - 1));
      int e = d.coin() ? 1 : -1;
      factor = braid_concat(braid_concat(u, BraidWord(n, {e * i, e * i})), braid_inverse(u));
    }
    if (static_cast<int>(factor.letters.size()) > room) continue;
    w = braid_concat(w, factor);
  }
  return free_reduce(w);
}

// Braid word from `top` to `bottom` (equal letter multisets): random letters,
// then a crossing pattern that sorts the labels into place.
BraidWord connecting_word(const Word& top, const Word& bottom, int length, Draw& d) {
  const int n = static_cast<int>(std::max<std::size_t>(top.size(), 1));
  BraidWord w = random_braid_word(n, length, d);
  if (top.size() < 2) return w;
  Word arrived = DigitalBraid::from_top(top, w).bottom();
  std::map<Letter, std::vector<int>> slots;
  for (int i = static_cast<int>(bottom.size()) - 1; i >= 0; --i) slots[bottom[i]].push_back(i);
  Permutation fix;
  fix.images.resize(top.size());
  for (std::size_t p = 0; p < arrived.size(); ++p) {
    auto& s = slots[arrived[p]];
    fix.images[p] = s.back();
    s.pop_back();
  }
  return free_reduce(braid_concat(w, permutation_braid(fix, d.coin() ? 1 : -1)));
}

bool same_multiset(Word a, Word b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

ExpansionForest random_forest(const DigitRewritingSystem& drs, const Word& w, int steps,
                              std::uint64_t seed) {
  Draw d(seed);
  return forest_from_steps(drs, w, random_steps(drs, w, steps, d));
}

BraidWord random_braid_word(int strands, int length, std::uint64_t seed) {
  Draw d(seed);
  return random_braid_word(strands, length, d);
}

BraidWord random_pure_braid_word(int strands, int max_length, std::uint64_t seed) {
  Draw d(seed);
  return random_pure_word(strands, max_length, d);
}

FractionElement random_element(const GroupContext& ctx, int budget, std::uint64_t seed) {
  if (budget < 0) throw std::invalid_argument("random_element: negative budget");
  Draw d(seed);
  const DigitRewritingSystem& drs = *ctx.drs;
  const bool exact = ctx.flavor == Flavor::PureBraided || ctx.flavor == Flavor::Plain;

  int k = d.upto(budget);
  ExpansionForest t = forest_from_steps(drs, ctx.base, random_steps(drs, ctx.base, k, d));
  ExpansionForest s = t;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExpansionForest c = forest_from_steps(drs, ctx.base, random_steps(drs, ctx.base, k, d));
    if (exact ? c.leaves() == t.leaves() : same_multiset(c.leaves(), t.leaves())) {
      s = std::move(c);
      break;
    }
  }

  const Word top = t.leaves();
  const int n = static_cast<int>(std::max<std::size_t>(top.size(), 1));
  BraidWord w(n, {});
  switch (ctx.flavor) {
    case Flavor::Braided:
    case Flavor::Permutation:
      w = connecting_word(top, s.leaves(), d.upto(2 * budget), d);
      break;
    case Flavor::PureBraided:
      w = random_pure_word(n, 2 * budget, d);
      break;
    case Flavor::Plain:
      break;
  }
  DigitalBraid g(top, s.leaves(), std::move(w));
  return FractionElement(ctx, std::move(t), std::move(g), std::move(s));
}

}  // namespace braidfrac
