#include "braidfrac/forest.hpp"

#include <algorithm>
#include <set>

#include "braidfrac/errors.hpp"

namespace braidfrac {

std::size_t ExpansionTree::leaf_count() const {
  if (children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

std::size_t ExpansionTree::internal_count() const {
  if (children.empty()) return 0;
  std::size_t n = 1;
  for (const auto& c : children) n += c.internal_count();
  return n;
}

void ExpansionTree::append_leaves(Word& out) const {
  if (children.empty()) {
    out.push_back(label);
    return;
  }
  for (const auto& c : children) c.append_leaves(out);
}

ExpansionForest::ExpansionForest(Word source, std::vector<ExpansionTree> trees)
    : source_(std::move(source)), trees_(std::move(trees)) {
  if (source_.size() != trees_.size())
    throw MismatchError("forest has " + std::to_string(trees_.size()) + " trees for a source of " +
                        std::to_string(source_.size()) + " letters");
  for (std::size_t i = 0; i < source_.size(); ++i)
    if (trees_[i].label != source_[i]) throw MismatchError("tree root does not match source letter");
}

ExpansionForest ExpansionForest::identity(const Word& w) {
  std::vector<ExpansionTree> trees;
  trees.reserve(w.size());
  for (Letter l : w) trees.push_back(ExpansionTree{l, {}});
  return ExpansionForest(w, std::move(trees));
}

Word ExpansionForest::leaves() const {
  Word out;
  for (const auto& t : trees_) t.append_leaves(out);
  return out;
}

std::size_t ExpansionForest::leaf_count() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.leaf_count();
  return n;
}

std::size_t ExpansionForest::size() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.internal_count();
  return n;
}

Word forest_leaves(const ExpansionForest& f) { return f.leaves(); }

ExpansionForest forest_from_steps(const DigitRewritingSystem& drs, const Word& source,
                                  const std::vector<int>& steps) {
  std::vector<ExpansionTree> trees;
  trees.reserve(source.size());
  for (Letter l : source) trees.push_back(ExpansionTree{l, {}});
  // Children vectors are assigned once and never resized, so leaf pointers stay valid.
  std::vector<ExpansionTree*> current;
  for (auto& t : trees) current.push_back(&t);

  for (std::size_t s = 0; s < steps.size(); ++s) {
    int p = steps[s];
    if (p < 1 || static_cast<std::size_t>(p) > current.size())
      throw InvalidSystem("step " + std::to_string(s + 1) + ": position " + std::to_string(p) +
                          " outside word of length " + std::to_string(current.size()));
    ExpansionTree* node = current[p - 1];
    const RewriteRule* rule = drs.rule(node->label);
    if (!rule)
      throw InvalidSystem("step " + std::to_string(s + 1) + ": letter '" + drs.name(node->label) +
                          "' at position " + std::to_string(p) + " has no rule");
    node->children.reserve(rule->rhs.size());
    for (Letter l : rule->rhs) node->children.push_back(ExpansionTree{l, {}});
    std::vector<ExpansionTree*> next;
    next.reserve(current.size() + rule->rhs.size() - 1);
    next.insert(next.end(), current.begin(), current.begin() + (p - 1));
    for (auto& c : node->children) next.push_back(&c);
    next.insert(next.end(), current.begin() + p, current.end());
    current = std::move(next);
  }
  return ExpansionForest(source, std::move(trees));
}

namespace {

void steps_of(const ExpansionTree& t, int& leaves_before, std::vector<int>& out) {
  if (!t.expanded()) {
    ++leaves_before;
    return;
  }
  out.push_back(leaves_before + 1);
  for (const auto& c : t.children) steps_of(c, leaves_before, out);
}

bool tree_valid(const DigitRewritingSystem& drs, const ExpansionTree& t) {
  if (!t.expanded()) return true;
  const RewriteRule* rule = drs.rule(t.label);
  if (!rule || rule->rhs.size() != t.children.size()) return false;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (t.children[i].label != rule->rhs[i]) return false;
    if (!tree_valid(drs, t.children[i])) return false;
  }
  return true;
}

ExpansionTree graft_tree(const ExpansionTree& t, const std::vector<ExpansionTree>& repl,
                         std::size_t& next) {
  if (!t.expanded()) return repl[next++];
  ExpansionTree out{t.label, {}};
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) out.children.push_back(graft_tree(c, repl, next));
  return out;
}

// Appends the subtrees of `upper` hanging below the leaves of `lower`.
bool complement_tree(const ExpansionTree& lower, const ExpansionTree& upper,
                     std::vector<ExpansionTree>& out) {
  if (lower.label != upper.label) return false;
  if (!lower.expanded()) {
    out.push_back(upper);
    return true;
  }
  if (upper.children.size() != lower.children.size()) return false;
  for (std::size_t i = 0; i < lower.children.size(); ++i)
    if (!complement_tree(lower.children[i], upper.children[i], out)) return false;
  return true;
}

ExpansionTree join_tree(const ExpansionTree& a, const ExpansionTree& b) {
  if (!a.expanded()) return b;
  if (!b.expanded()) return a;
  ExpansionTree out{a.label, {}};
  out.children.reserve(a.children.size());
  for (std::size_t i = 0; i < a.children.size(); ++i)
    out.children.push_back(join_tree(a.children[i], b.children[i]));
  return out;
}

// Backtracking parse of target[pos..end) as a sequence of trees rooted at labels[idx..].
bool parse_sequence(const DigitRewritingSystem& drs, const Word& labels, std::size_t idx,
                    const Word& target, std::size_t pos, std::size_t end,
                    std::vector<ExpansionTree>& out);

bool parse_tree(const DigitRewritingSystem& drs, Letter label, const Word& target, std::size_t pos,
                std::size_t len, ExpansionTree& out) {
  if (len == 1 && target[pos] == label) {
    out = ExpansionTree{label, {}};
    return true;
  }
  const RewriteRule* rule = drs.rule(label);
  if (!rule || len < rule->rhs.size()) return false;
  std::vector<ExpansionTree> children;
  if (!parse_sequence(drs, rule->rhs, 0, target, pos, pos + len, children)) return false;
  out = ExpansionTree{label, std::move(children)};
  return true;
}

bool parse_sequence(const DigitRewritingSystem& drs, const Word& labels, std::size_t idx,
                    const Word& target, std::size_t pos, std::size_t end,
                    std::vector<ExpansionTree>& out) {
  if (idx == labels.size()) return pos == end;
  std::size_t remaining = labels.size() - idx;
  if (end - pos < remaining) return false;
  std::size_t max_len = end - pos - (remaining - 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    ExpansionTree t;
    if (!parse_tree(drs, labels[idx], target, pos, len, t)) continue;
    out.push_back(std::move(t));
    if (parse_sequence(drs, labels, idx + 1, target, pos + len, end, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::vector<int> forest_steps(const ExpansionForest& f) {
  std::vector<int> out;
  int before = 0;
  for (const auto& t : f.trees()) steps_of(t, before, out);
  return out;
}

bool forest_valid(const DigitRewritingSystem& drs, const ExpansionForest& f) {
  return std::all_of(f.trees().begin(), f.trees().end(),
                     [&](const ExpansionTree& t) { return tree_valid(drs, t); });
}

ExpansionForest forest_graft(const ExpansionForest& first, const ExpansionForest& second) {
  if (first.leaves() != second.source())
    throw MismatchError("graft: leaves of the first forest differ from the source of the second");
  std::vector<ExpansionTree> trees;
  trees.reserve(first.trees().size());
  std::size_t next = 0;
  for (const auto& t : first.trees()) trees.push_back(graft_tree(t, second.trees(), next));
  return ExpansionForest(first.source(), std::move(trees));
}

bool forest_below(const ExpansionForest& lower, const ExpansionForest& upper) {
  if (lower.source() != upper.source()) return false;
  std::vector<ExpansionTree> scratch;
  for (std::size_t i = 0; i < lower.trees().size(); ++i)
    if (!complement_tree(lower.trees()[i], upper.trees()[i], scratch)) return false;
  return true;
}

ExpansionForest forest_complement(const ExpansionForest& lower, const ExpansionForest& upper) {
  if (lower.source() != upper.source()) throw MismatchError("complement: source mismatch");
  std::vector<ExpansionTree> trees;
  for (std::size_t i = 0; i < lower.trees().size(); ++i)
    if (!complement_tree(lower.trees()[i], upper.trees()[i], trees))
      throw NotUpperBound("complement: forest is not below the target");
  return ExpansionForest(lower.leaves(), std::move(trees));
}

ForestJoin forest_join(const ExpansionForest& s, const ExpansionForest& t) {
  if (s.source() != t.source()) throw MismatchError("join: source mismatch");
  std::vector<ExpansionTree> trees;
  trees.reserve(s.trees().size());
  for (std::size_t i = 0; i < s.trees().size(); ++i)
    trees.push_back(join_tree(s.trees()[i], t.trees()[i]));
  ExpansionForest j(s.source(), std::move(trees));
  ExpansionForest b = forest_complement(s, j);
  ExpansionForest a = forest_complement(t, j);
  return ForestJoin{std::move(j), std::move(b), std::move(a)};
}

std::vector<ExpansionForest> enumerate_expansions(const DigitRewritingSystem& drs, const Word& w,
                                                  int depth) {
  std::vector<std::vector<int>> all{{}};
  std::set<std::vector<int>> seen{{}};
  std::vector<ExpansionForest> frontier{ExpansionForest::identity(w)};
  for (int d = 0; d < depth; ++d) {
    std::vector<ExpansionForest> next;
    for (const auto& f : frontier) {
      Word leaves = f.leaves();
      for (std::size_t p = 0; p < leaves.size(); ++p) {
        if (!drs.expands(leaves[p])) continue;
        ExpansionForest g =
            forest_graft(f, forest_from_steps(drs, leaves, {static_cast<int>(p + 1)}));
        auto key = forest_steps(g);
        if (seen.insert(key).second) {
          all.push_back(std::move(key));
          next.push_back(std::move(g));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<ExpansionForest> out;
  out.reserve(all.size());
  for (const auto& steps : all) out.push_back(forest_from_steps(drs, w, steps));
  return out;
}

std::optional<ExpansionForest> forest_from_leaves(const DigitRewritingSystem& drs,
                                                  const Word& source, const Word& target) {
  std::vector<ExpansionTree> trees;
  if (!parse_sequence(drs, source, 0, target, 0, target.size(), trees)) return std::nullopt;
  return ExpansionForest(source, std::move(trees));
}

}  // namespace braidfrac
