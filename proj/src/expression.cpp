#include "braidfrac/expression.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "braidfrac/errors.hpp"
#include "braidfrac/families.hpp"
#include "braidfrac/magnus.hpp"

namespace braidfrac {

std::string format_steps(const ExpansionForest& f) {
  std::string out = "[";
  auto steps = forest_steps(f);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(steps[i]);
  }
  return out + "]";
}

std::string format_element(const FractionElement& e) {
  return "frac T=" + format_steps(e.T()) + " B=[" + format_braid_word(e.g().word()) +
         "] S=" + format_steps(e.S());
}

namespace {

class Parser {
 public:
  Parser(const GroupContext* ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  bool keyword(std::string_view kw) {
    skip();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t after = pos_ + kw.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer", start);
    int v = 0;
    const char* b = text_.data() + start;
    if (*b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_ || b == text_.data() + pos_)
      fail("expected an integer", start);
    return v;
  }
  // Integers up to `close`, separated by spaces or commas.
  std::vector<std::pair<int, std::size_t>> integers_until(char close) {
    std::vector<std::pair<int, std::size_t>> out;
    while (!peek(close)) {
      if (done()) fail(std::string("missing '") + close + "'");
      skip();
      std::size_t at = pos_;
      out.push_back({integer(), at});
      accept(',');
    }
    ++pos_;
    return out;
  }

  ExpansionForest steps(char name) {
    if (!keyword(std::string(1, name))) fail(std::string("expected '") + name + "='");
    expect('=');
    expect('[');
    std::size_t open = pos_;
    std::vector<int> steps;
    for (const auto& entry : integers_until(']')) steps.push_back(entry.first);
    try {
      return forest_from_steps(*ctx_->drs, ctx_->base, steps);
    } catch (const InvalidSystem& e) {
      fail(e.what(), open);
    }
  }

  FractionElement literal() {
    ExpansionForest t = steps('T');
    skip();
    if (!keyword("B")) fail("expected 'B='");
    expect('=');
    expect('[');
    std::size_t open = pos_;
    const int n = static_cast<int>(std::max<std::size_t>(t.leaf_count(), 1));
    BraidWord w(n, {});
    for (auto [v, where] : integers_until(']')) {
      if (v == 0 || std::abs(v) >= n)
        fail("generator " + std::to_string(v) + " out of range for " + std::to_string(n) + " strands",
             where);
      w.letters.push_back(v);
    }
    ExpansionForest s = steps('S');
    try {
      return FractionElement(*ctx_, t, DigitalBraid(t.leaves(), s.leaves(), std::move(w)), s);
    } catch (const MismatchError& e) {
      fail(e.what(), open);
    }
  }

  FractionElement atom() {
    skip();
    std::size_t start = pos_;
    if (accept('(')) {
      FractionElement e = expr();
      expect(')');
      return e;
    }
    std::string name = word();
    if (name == "frac") return literal();
    if (name == "id") return FractionElement::identity(*ctx_);
    if (name == "inv") {
      expect('(');
      FractionElement e = expr();
      expect(')');
      return invert(e);
    }
    if (name == "bh1") {
      expect('(');
      int i = integer();
      bool over = true;
      if (accept(',')) {
        skip();
        std::size_t at = pos_;
        std::string which = word();
        if (which == "under") over = false;
        else if (which != "over") fail("expected 'over' or 'under'", at);
      }
      expect(')');
      try {
        return bh1_element(*ctx_, i, over);
      } catch (const MismatchError& e) {
        fail(e.what(), start);
      }
    }
    if (name == "bh2") {
      expect('(');
      int i = integer();
      int k = -1;
      if (accept(',')) k = integer();
      expect(';');
      auto letters = integers_until(')');
      int top = 0;
      for (auto [v, where] : letters) {
        if (v == 0) fail("generator 0 does not exist", where);
        top = std::max(top, std::abs(v));
      }
      if (k < 0) k = top + 1;
      if (k < 1 || top >= k) fail("bh2 block of " + std::to_string(k) + " strands is too small", start);
      BraidWord inner(k, {});
      for (const auto& entry : letters) inner.letters.push_back(entry.first);
      try {
        return bh2_element(*ctx_, i, inner);
      } catch (const MismatchError& e) {
        fail(e.what(), start);
      }
    }
    if (name.empty()) fail("expected an element");
    fail("unknown name '" + name + "'", start);
  }

  FractionElement expr() {
    FractionElement e = atom();
    while (accept('*')) e = multiply(e, atom());
    return e;
  }

  FractionElement whole(bool single_literal) {
    FractionElement e;
    if (single_literal) {
      skip();
      std::size_t start = pos_;
      if (word() != "frac") fail("expected 'frac'", start);
      e = literal();
    } else {
      e = expr();
    }
    if (!done()) fail("unexpected trailing input");
    return e;
  }

  PLMap plmap() {
    std::vector<PLMap::Point> pts;
    while (!done()) {
      expect('(');
      Rational x = rational();
      expect(',');
      Rational y = rational();
      expect(')');
      pts.emplace_back(std::move(x), std::move(y));
    }
    try {
      return PLMap(std::move(pts));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), 0);
    }
  }

 private:
  BigInt big_integer(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected an integer", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    skip();
    std::size_t start = pos_;
    BigInt num = big_integer(true);
    BigInt den = 1;
    if (accept('/')) den = big_integer(false);
    if (den == 0) fail("zero denominator", start);
    return Rational(num, den);
  }

  const GroupContext* ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FractionElement parse_element(const GroupContext& ctx, std::string_view text) {
  return Parser(&ctx, text).whole(true);
}

FractionElement parse_expression(const GroupContext& ctx, std::string_view text) {
  return Parser(&ctx, text).whole(false);
}

PLMap parse_plmap(std::string_view text) { return Parser(nullptr, text).plmap(); }

}  // namespace braidfrac
