#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace braidfrac {

/// Index of a letter in its alphabet.
enum class Letter : std::uint32_t {};

constexpr std::uint32_t index_of(Letter l) { return static_cast<std::uint32_t>(l); }

using Word = std::vector<Letter>;

struct RewriteRule {
  Letter lhs;
  Word rhs;  // at least two letters
};

/// Alphabet plus at most one expansion rule `x -> u1 ... uk` (k >= 2) per
/// letter. Letters without a rule never expand.
class DigitRewritingSystem {
 public:
  DigitRewritingSystem() = default;

  /// Throws InvalidSystem on an empty/duplicate/malformed letter name.
  Letter add_letter(const std::string& name);
  /// Throws InvalidSystem for unknown letters, arity < 2 or a second rule.
  void add_rule(Letter lhs, Word rhs);

  std::size_t alphabet_size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(index_of(l)); }
  std::optional<Letter> find(std::string_view name) const;
  /// Throws InvalidSystem when the name is not in the alphabet.
  Letter letter(std::string_view name) const;

  const RewriteRule* rule(Letter l) const {
    const auto& r = rules_.at(index_of(l));
    return r ? &*r : nullptr;
  }
  bool expands(Letter l) const { return rules_.at(index_of(l)).has_value(); }
  std::size_t rule_count() const;

  const Word& base() const { return base_; }
  void set_base(Word base) { base_ = std::move(base); }

  /// Space-separated letter names.
  std::string format(const Word& w) const;
  /// Inverse of format(); throws InvalidSystem on unknown names.
  Word parse_word(std::string_view text) const;

  /// Text in the `alphabet:` / `rule:` / `base:` file format.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  std::vector<std::optional<RewriteRule>> rules_;
  Word base_;
};

bool valid_letter_name(std::string_view name);

/// Parses the line-based DRS format:
///
///     # comment
///     alphabet: x y1 y2
///     rule: y1 -> y1 x
///     base: y1 y2
///
/// Errors carry the offending line and column.
DigitRewritingSystem parse_drs(std::string_view text);

}  // namespace braidfrac
