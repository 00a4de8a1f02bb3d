#include "braidfrac/drs.hpp"

#include <cctype>
#include <sstream>

#include "braidfrac/errors.hpp"

namespace braidfrac {

bool valid_letter_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || u == '_')) return false;
  }
  return true;
}

Letter DigitRewritingSystem::add_letter(const std::string& name) {
  if (!valid_letter_name(name)) throw InvalidSystem("invalid letter name '" + name + "'");
  if (index_.count(name)) throw InvalidSystem("duplicate letter '" + name + "'");
  Letter l{static_cast<std::uint32_t>(names_.size())};
  names_.push_back(name);
  index_.emplace(name, l);
  rules_.emplace_back();
  return l;
}

void DigitRewritingSystem::add_rule(Letter lhs, Word rhs) {
  if (index_of(lhs) >= names_.size()) throw InvalidSystem("rule for unknown letter");
  for (Letter l : rhs)
    if (index_of(l) >= names_.size()) throw InvalidSystem("rule uses unknown letter");
  if (rhs.size() < 2)
    throw InvalidSystem("rule for '" + name(lhs) + "' has arity " +
                        std::to_string(rhs.size()) + "; at least 2 is required");
  auto& slot = rules_[index_of(lhs)];
  if (slot) throw InvalidSystem("duplicate rule for '" + name(lhs) + "'");
  slot = RewriteRule{lhs, std::move(rhs)};
}

std::optional<Letter> DigitRewritingSystem::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter DigitRewritingSystem::letter(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw InvalidSystem("unknown letter '" + std::string(name) + "'");
}

std::size_t DigitRewritingSystem::rule_count() const {
  std::size_t n = 0;
  for (const auto& r : rules_) n += r.has_value();
  return n;
}

std::string DigitRewritingSystem::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word DigitRewritingSystem::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  Word w;
  std::string tok;
  while (in >> tok) w.push_back(letter(tok));
  return w;
}

std::string DigitRewritingSystem::to_text() const {
  std::string out = "alphabet:";
  for (const auto& n : names_) out += " " + n;
  out += '\n';
  for (const auto& r : rules_) {
    if (!r) continue;
    out += "rule: " + name(r->lhs) + " ->";
    for (Letter l : r->rhs) out += " " + name(l);
    out += '\n';
  }
  if (!base_.empty()) out += "base: " + format(base_) + '\n';
  return out;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

DigitRewritingSystem parse_drs(std::string_view text) {
  DigitRewritingSystem drs;
  bool have_alphabet = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens.front().text;
    auto fail = [&](const std::string& msg, std::size_t col) -> ParseError {
      return ParseError(msg, line_no, col);
    };
    auto letter_at = [&](const Token& t) {
      auto l = drs.find(t.text);
      if (!l) throw fail("unknown letter '" + t.text + "'", t.column);
      return *l;
    };

    if (key == "alphabet:") {
      if (have_alphabet) throw fail("alphabet declared twice", tokens.front().column);
      if (tokens.size() == 1) throw fail("empty alphabet", tokens.front().column);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        try {
          drs.add_letter(tokens[i].text);
        } catch (const InvalidSystem& e) {
          throw fail(e.what(), tokens[i].column);
        }
      }
      have_alphabet = true;
    } else if (key == "rule:") {
      if (!have_alphabet) throw fail("rule before alphabet", tokens.front().column);
      if (tokens.size() < 3 || tokens[2].text != "->")
        throw fail("expected 'rule: <letter> -> <letter> ...'", tokens.front().column);
      Letter lhs = letter_at(tokens[1]);
      Word rhs;
      for (std::size_t i = 3; i < tokens.size(); ++i) rhs.push_back(letter_at(tokens[i]));
      try {
        drs.add_rule(lhs, std::move(rhs));
      } catch (const InvalidSystem& e) {
        throw fail(e.what(), tokens[1].column);
      }
    } else if (key == "base:") {
      if (!have_alphabet) throw fail("base before alphabet", tokens.front().column);
      Word base;
      for (std::size_t i = 1; i < tokens.size(); ++i) base.push_back(letter_at(tokens[i]));
      drs.set_base(std::move(base));
    } else {
      throw fail("unknown directive '" + key + "'", tokens.front().column);
    }
  }
  if (!have_alphabet) throw ParseError("missing 'alphabet:' line", 0, 0);
  return drs;
}

}  // namespace braidfrac
