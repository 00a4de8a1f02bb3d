#include "braidfrac/magnus.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "braidfrac/errors.hpp"

namespace braidfrac {

namespace {

void reduce_letters(std::vector<int>& word) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (top > 0 && word[top - 1] == -word[i]) {
      --top;
    } else {
      word[top++] = word[i];
    }
  }
  word.resize(top);
}

void add_term(std::map<std::vector<int>, BigInt, MonomialLess>& terms, std::vector<int> m,
              const BigInt& c) {
  auto [it, inserted] = terms.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out = w;
  reduce_letters(out.letters);
  return out;
}

std::string format_free_word(const FreeWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += "x" + std::to_string(std::abs(w.letters[i]));
    if (w.letters[i] < 0) out += "^-1";
  }
  return out;
}

NcPolynomial NcPolynomial::one(int degree) {
  NcPolynomial p;
  p.degree = degree;
  p.terms.emplace(std::vector<int>{}, BigInt(1));
  return p;
}

BigInt NcPolynomial::coefficient(const std::vector<int>& monomial) const {
  auto it = terms.find(monomial);
  return it == terms.end() ? BigInt(0) : it->second;
}

NcPolynomial nc_multiply(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial out;
  out.degree = std::min(a.degree, b.degree);
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      if (static_cast<int>(ma.size() + mb.size()) > out.degree) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      add_term(out.terms, std::move(m), ca * cb);
    }
  }
  return out;
}

std::string format_polynomial(const NcPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms) {
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty() || mag != 1) out += mag.str();
    for (int g : m) out += "X" + std::to_string(g);
  }
  return out;
}

NcPolynomial magnus_expand(const FreeWord& w, int degree) {
  if (degree < 1) throw std::invalid_argument("Magnus truncation degree must be at least 1");
  NcPolynomial p = NcPolynomial::one(degree);
  for (int letter : w.letters) {
    const int g = std::abs(letter);
    NcPolynomial next;
    next.degree = degree;
    for (const auto& [m, c] : p.terms) {
      add_term(next.terms, m, c);
      const int room = degree - static_cast<int>(m.size());
      if (letter > 0) {
        if (room >= 1) {
          std::vector<int> ext = m;
          ext.push_back(g);
          add_term(next.terms, std::move(ext), c);
        }
      } else {
        // (1 + X)^-1 = 1 - X + X^2 - ...
        std::vector<int> ext = m;
        for (int t = 1; t <= room; ++t) {
          ext.push_back(g);
          add_term(next.terms, ext, (t % 2) ? BigInt(-c) : c);
        }
      }
    }
    p = std::move(next);
  }
  return p;
}

Sign free_word_sign(const FreeWord& w, int degree_cap) {
  FreeWord r = free_reduce(w);
  if (r.letters.empty()) return Sign::Zero;
  for (int d = 1; d <= degree_cap; ++d) {
    NcPolynomial p = magnus_expand(r, d);
    for (const auto& [m, c] : p.terms) {
      if (m.empty()) continue;
      return c > 0 ? Sign::Positive : Sign::Negative;
    }
  }
  throw BudgetExceeded("Magnus expansion vanished up to degree " + std::to_string(degree_cap));
}

bool CombedForm::trivial() const {
  return std::all_of(components.begin(), components.end(),
                     [](const FreeWord& w) { return w.letters.empty(); });
}

BraidWord loop_generator(int j, int level, int strands) {
  BraidWord out;
  out.strands = strands;
  for (int k = level - 1; k > j; --k) out.letters.push_back(-k);
  out.letters.push_back(j);
  out.letters.push_back(j);
  for (int k = j + 1; k < level; ++k) out.letters.push_back(k);
  return out;
}

namespace {

// Loop of the last strand of a pure braid as a free word of rank m-1.
//
// Tracks the Artin action x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i of the
// prefixes, composed so that the full word acts as phi(a_1) o ... o phi(a_k).
// Each image is kept as conj[i] x_{gen[i]} conj[i]^-1. The strands below m
// are untouched by the section, so the image of x_m is c x_m c^-1 with c the
// loop read backwards once x_m is erased.
FreeWord top_component(const BraidWord& w, std::size_t length_cap) {
  const int m = w.strands;
  std::vector<std::vector<int>> conj(m);
  std::vector<int> gen(m);
  for (int i = 0; i < m; ++i) gen[i] = i + 1;

  std::vector<int> scratch;
  auto product = [&](const std::vector<int>& c, int g, const std::vector<int>& tail) {
    // c x_g c^-1 tail
    scratch.clear();
    scratch.reserve(2 * c.size() + 1 + tail.size());
    scratch.insert(scratch.end(), c.begin(), c.end());
    scratch.push_back(g);
    for (auto it = c.rbegin(); it != c.rend(); ++it) scratch.push_back(-*it);
    scratch.insert(scratch.end(), tail.begin(), tail.end());
    reduce_letters(scratch);
    if (scratch.size() > length_cap)
      throw BudgetExceeded("combing word exceeded " + std::to_string(length_cap) + " letters");
    return scratch;
  };

  for (int letter : w.letters) {
    const int a = std::abs(letter) - 1;
    if (letter > 0) {
      std::vector<int> left = product(conj[a], gen[a], conj[a + 1]);
      conj[a + 1] = std::move(conj[a]);
      std::swap(gen[a], gen[a + 1]);
      conj[a] = std::move(left);
    } else {
      std::vector<int> right = product(conj[a + 1], -gen[a + 1], conj[a]);
      conj[a] = std::move(conj[a + 1]);
      std::swap(gen[a], gen[a + 1]);
      conj[a + 1] = std::move(right);
    }
  }

  FreeWord out;
  out.rank = m - 1;
  for (auto it = conj[m - 1].rbegin(); it != conj[m - 1].rend(); ++it)
    if (std::abs(*it) != m) out.letters.push_back(*it);
  reduce_letters(out.letters);
  return out;
}

}  // namespace

CombedForm comb(const BraidWord& pure, std::size_t length_cap) {
  if (!permutation_of(pure).is_identity()) throw std::invalid_argument("comb: braid is not pure");
  CombedForm out;
  out.strands = pure.strands;
  BraidWord current = free_reduce(pure);
  for (int level = pure.strands; level >= 2; --level) {
    out.components.push_back(top_component(current, length_cap));
    std::vector<bool> drop(level, false);
    drop[level - 1] = true;
    current = free_reduce(drop_strands(current, drop));
  }
  return out;
}

CombedForm comb(const DigitalBraid& g, std::size_t length_cap) {
  return comb(forget_digits(g), length_cap);
}

BraidWord reassemble(const CombedForm& c) {
  BraidWord out;
  out.strands = c.strands;
  for (std::size_t k = 0; k < c.components.size(); ++k) {
    const int level = c.strands - static_cast<int>(k);
    for (int letter : c.components[k].letters) {
      BraidWord gen = loop_generator(std::abs(letter), level, c.strands);
      if (letter < 0) gen = braid_inverse(gen);
      out.letters.insert(out.letters.end(), gen.letters.begin(), gen.letters.end());
    }
  }
  return out;
}

Sign pure_braid_sign(const BraidWord& pure, int degree_cap) {
  // The loops of strand n form the kernel of forgetting that strand, so the
  // quotient levels are compared first: level 2 up to level n.
  CombedForm c = comb(pure);
  for (auto it = c.components.rbegin(); it != c.components.rend(); ++it) {
    Sign s = free_word_sign(*it, degree_cap);
    if (s != Sign::Zero) return s;
  }
  return Sign::Zero;
}

Sign pure_braid_sign(const DigitalBraid& g, int degree_cap) {
  return pure_braid_sign(forget_digits(g), degree_cap);
}

}  // namespace braidfrac
