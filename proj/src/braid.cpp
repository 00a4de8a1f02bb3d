#include "braidfrac/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "braidfrac/errors.hpp"

namespace braidfrac {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "positive";
    case Sign::Negative: return "negative";
    case Sign::Zero: return "zero";
  }
  return "zero";
}

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int a : letters)
    if (a == 0 || std::abs(a) >= strands)
      throw std::invalid_argument("generator " + std::to_string(a) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) p.images[images[i]] = static_cast<int>(i);
  return p;
}

Permutation permutation_of(const BraidWord& w) {
  // at[pos] = top index of the strand currently at pos
  std::vector<int> at(w.strands);
  for (int i = 0; i < w.strands; ++i) at[i] = i;
  for (int a : w.letters) {
    int i = std::abs(a) - 1;
    std::swap(at[i], at[i + 1]);
  }
  Permutation p;
  p.images.resize(w.strands);
  for (int pos = 0; pos < w.strands; ++pos) p.images[at[pos]] = pos;
  return p;
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw MismatchError("braid strand counts differ");
  BraidWord out;
  out.strands = a.strands;
  out.letters.reserve(a.letters.size() + b.letters.size());
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord braid_inverse(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

namespace {

void free_reduce_in_place(std::vector<int>& word) {
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

}  // namespace

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out = w;
  free_reduce_in_place(out.letters);
  return out;
}

BraidWord handle_reduce(const BraidWord& w, std::size_t budget) {
  std::vector<int> word = w.letters;
  free_reduce_in_place(word);
  const int n = w.strands;
  // open[i]: position of the latest sigma_i letter not yet shadowed by a
  // lower generator, or -1.
  std::vector<long> open(n + 1, -1);
  std::vector<int> buffer;
  std::size_t rewrites = 0;

  for (;;) {
    std::fill(open.begin(), open.end(), -1);
    long hs = -1, he = -1;
    for (long k = 0; k < static_cast<long>(word.size()); ++k) {
      int m = std::abs(word[k]);
      long j = open[m];
      if (j >= 0 && word[j] == -word[k]) {
        hs = j;
        he = k;
        break;
      }
      open[m] = k;
      for (int i = m + 1; i < n; ++i) open[i] = -1;
    }
    if (hs < 0) break;

    if (++rewrites > budget)
      throw BudgetExceeded("handle reduction exceeded " + std::to_string(budget) + " rewrites");

    const int i = std::abs(word[hs]);
    const int e = word[hs] > 0 ? 1 : -1;
    buffer.clear();
    buffer.reserve(word.size() + 2 * static_cast<std::size_t>(he - hs));
    buffer.insert(buffer.end(), word.begin(), word.begin() + hs);
    for (long t = hs + 1; t < he; ++t) {
      int b = word[t];
      if (std::abs(b) == i + 1) {
        int d = b > 0 ? 1 : -1;
        buffer.push_back(-e * (i + 1));
        buffer.push_back(d * i);
        buffer.push_back(e * (i + 1));
      } else {
        buffer.push_back(b);
      }
    }
    buffer.insert(buffer.end(), word.begin() + he + 1, word.end());
    free_reduce_in_place(buffer);
    word.swap(buffer);
  }
  BraidWord out;
  out.strands = w.strands;
  out.letters = std::move(word);
  return out;
}

Sign dehornoy_sign(const BraidWord& w, std::size_t budget) {
  BraidWord r = handle_reduce(w, budget);
  if (r.letters.empty()) return Sign::Zero;
  auto it = std::min_element(r.letters.begin(), r.letters.end(),
                             [](int a, int b) { return std::abs(a) < std::abs(b); });
  return *it > 0 ? Sign::Positive : Sign::Negative;
}

bool braid_trivial(const BraidWord& w, std::size_t budget) {
  return handle_reduce(w, budget).letters.empty();
}

bool braid_equal(const BraidWord& a, const BraidWord& b, std::size_t budget) {
  if (a.strands != b.strands) return false;
  if (a.letters == b.letters) return true;
  return braid_trivial(braid_concat(a, braid_inverse(b)), budget);
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '-' || c == '+') ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits || (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
                        text[i] != ','))
      throw ParseError("expected a signed generator index", 1, start + 1);
    int v = std::stoi(std::string(text.substr(start, i - start)));
    if (v == 0 || std::abs(v) >= strands)
      throw ParseError("generator " + std::to_string(v) + " out of range for " +
                           std::to_string(strands) + " strands",
                       1, start + 1);
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(const BraidWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

BraidWord permutation_braid(const Permutation& perm, int sign) {
  const int n = static_cast<int>(perm.images.size());
  // target[pos] = bottom position wanted by the strand currently at pos
  std::vector<int> target = perm.images;
  BraidWord out;
  out.strands = std::max(n, 1);
  for (int pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (target[p] > target[p + 1]) {
        std::swap(target[p], target[p + 1]);
        out.letters.push_back(sign * (p + 1));
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return out;
}

BraidWord drop_strands(const BraidWord& w, const std::vector<bool>& drop_top) {
  std::vector<int> at(w.strands);
  for (int i = 0; i < w.strands; ++i) at[i] = i;
  int kept = 0;
  for (int i = 0; i < w.strands; ++i) kept += !drop_top[i];
  BraidWord out;
  out.strands = std::max(kept, 1);
  for (int a : w.letters) {
    int p = std::abs(a) - 1;
    if (!drop_top[at[p]] && !drop_top[at[p + 1]]) {
      int before = 0;
      for (int q = 0; q < p; ++q) before += !drop_top[at[q]];
      out.letters.push_back(a > 0 ? before + 1 : -(before + 1));
    }
    std::swap(at[p], at[p + 1]);
  }
  return out;
}

std::vector<std::vector<int>> crossing_numbers(const BraidWord& w) {
  std::vector<std::vector<int>> m(w.strands, std::vector<int>(w.strands, 0));
  std::vector<int> at(w.strands);
  for (int i = 0; i < w.strands; ++i) at[i] = i;
  for (int a : w.letters) {
    int p = std::abs(a) - 1;
    int s = a > 0 ? 1 : -1;
    m[at[p]][at[p + 1]] += s;
    m[at[p + 1]][at[p]] += s;
    std::swap(at[p], at[p + 1]);
  }
  return m;
}

}  // namespace braidfrac
