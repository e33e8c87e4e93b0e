#pragma once

// Words over a finite alphabet of single lowercase letters: signed letters,
// free and cyclic reduction, canonical cyclic forms, and formal chains.
//
// Text format: lowercase letter = generator, uppercase = its inverse.
// Chain text: terms joined by " + ", e.g. "abAB + ab + BA".

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clgenus/errors.hpp"

namespace clgenus {

struct Letter {
  char gen = 'a';       // lowercase generator symbol
  std::int8_t sgn = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter x) { return {x.gen, static_cast<std::int8_t>(-x.sgn)}; }

inline bool mutually_inverse(Letter a, Letter b) { return a.gen == b.gen && a.sgn != b.sgn; }

// Total order: generators in alphabet order, positive before negative.
inline int letter_code(Letter x) {
  return 2 * static_cast<int>(static_cast<unsigned char>(x.gen)) + (x.sgn < 0 ? 1 : 0);
}

inline bool operator<(Letter a, Letter b) { return letter_code(a) < letter_code(b); }

inline char letter_char(Letter x) {
  return x.sgn > 0 ? x.gen : static_cast<char>(std::toupper(static_cast<unsigned char>(x.gen)));
}

class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::string_view generators) {
    for (char c : generators) {
      if (!std::islower(static_cast<unsigned char>(c)))
        throw domain_error("alphabet symbols must be single lowercase ASCII letters");
      if (!contains(c)) gens_.push_back(c);
    }
    std::sort(gens_.begin(), gens_.end());
  }

  static const Alphabet& lowercase() {
    static const Alphabet all("abcdefghijklmnopqrstuvwxyz");
    return all;
  }

  bool contains(char g) const { return gens_.find(g) != std::string::npos; }
  std::size_t size() const { return gens_.size(); }
  const std::string& generators() const { return gens_; }

 private:
  std::string gens_;
};

class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    reduced_ = scan_reduced(letters_);
  }

  // Transliterates text without reducing anything.
  static Word parse(std::string_view text, const Alphabet& alphabet = Alphabet::lowercase()) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      const unsigned char c = static_cast<unsigned char>(text[i]);
      const char low = static_cast<char>(std::tolower(c));
      if (!std::isalpha(c) || !alphabet.contains(low))
        throw parse_error("symbol outside alphabet at index " + std::to_string(i), i);
      out.push_back({low, static_cast<std::int8_t>(std::islower(c) ? 1 : -1)});
    }
    return Word(std::move(out));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // True iff no adjacent pair of letters is mutually inverse.
  bool reduced() const { return reduced_; }

  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool positive() const {
    return std::all_of(letters_.begin(), letters_.end(), [](Letter x) { return x.sgn > 0; });
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) s.push_back(letter_char(x));
    return s;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

 private:
  static bool scan_reduced(const std::vector<Letter>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (mutually_inverse(v[i], v[i + 1])) return false;
    return true;
  }

  std::vector<Letter> letters_;
  bool reduced_ = true;
};

inline Word concat(const Word& a, const Word& b) {
  std::vector<Letter> v;
  v.reserve(a.size() + b.size());
  v.insert(v.end(), a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return Word(std::move(v));
}

inline Word subword(const Word& w, std::size_t begin, std::size_t end) {
  return Word(std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(begin),
                                  w.letters().begin() + static_cast<std::ptrdiff_t>(end)));
}

inline Word repeated(const Word& w, int times) {
  std::vector<Letter> v;
  v.reserve(w.size() * static_cast<std::size_t>(std::max(times, 0)));
  for (int i = 0; i < times; ++i) v.insert(v.end(), w.begin(), w.end());
  return Word(std::move(v));
}

// Left rotation by r: w[r:] + w[:r].
inline Word rotated(const Word& w, std::size_t r) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  r %= n;
  std::vector<Letter> v;
  v.reserve(n);
  v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
  v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
  return Word(std::move(v));
}

inline Word invert(const Word& w) {
  std::vector<Letter> v;
  v.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) v.push_back(inverse(*it));
  return Word(std::move(v));
}

// Unique freely reduced representative of the same group element.
inline Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && mutually_inverse(stack.back(), x))
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return Word(std::move(stack));
}

inline bool is_cyclically_reduced(const Word& w) {
  if (!w.reduced()) return false;
  return w.size() < 2 || !mutually_inverse(w.letters().back(), w.letters().front());
}

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input = conjugator . core . conjugator^-1 after free reduction
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::vector<Letter> conj;
  while (r.size() >= 2 && mutually_inverse(r.letters().front(), r.letters().back())) {
    conj.push_back(r.letters().front());
    r = subword(r, 1, r.size() - 1);
  }
  return {r, Word(std::move(conj))};
}

// t . w . t^-1, freely reduced.
inline Word conjugated(const Word& w, const Word& t) {
  return free_reduce(concat(concat(t, w), invert(t)));
}

// u t u^-1 t^-1 as a plain concatenation (callers reduce as needed).
inline Word commutator(const Word& u, const Word& t) {
  return concat(concat(u, t), concat(invert(u), invert(t)));
}

inline std::array<long, 26> exponent_sums(const Word& w) {
  std::array<long, 26> sums{};
  for (Letter x : w) sums[static_cast<std::size_t>(x.gen - 'a')] += x.sgn;
  return sums;
}

// Letter-count multisets agree. Both words must be positive.
inline bool is_related(const Word& v, const Word& w) {
  if (!v.positive() || !w.positive())
    throw domain_error("is_related requires positive words");
  std::array<long, 26> cv{}, cw{};
  for (Letter x : v) ++cv[static_cast<std::size_t>(x.gen - 'a')];
  for (Letter x : w) ++cw[static_cast<std::size_t>(x.gen - 'a')];
  return cv == cw;
}

namespace detail {

// Index of the lexicographically least rotation (Booth-style two-pointer scan).
inline std::size_t least_rotation(const std::vector<int>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int ci = s[(i + k) % n];
    const int cj = s[(j + k) % n];
    if (ci == cj) {
      ++k;
      continue;
    }
    if (ci > cj)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

}  // namespace detail

// A word considered up to rotation, stored as its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  explicit CyclicWord(const Word& w) {
    std::vector<int> codes;
    codes.reserve(w.size());
    for (Letter x : w) codes.push_back(letter_code(x));
    canonical_ = rotated(w, detail::least_rotation(codes));
  }

  const Word& canonical() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.canonical_ == b.canonical_;
  }

 private:
  Word canonical_;
};

// Formal sum of words. The constructor cyclically reduces every term
// (recording the conjugators) and drops terms that reduce to the empty
// word; it does not check the boundary condition, see is_boundary.
class Chain {
 public:
  explicit Chain(std::vector<Word> terms) {
    if (terms.empty()) throw domain_error("a chain needs at least one term");
    for (const Word& t : terms) {
      CyclicReduction cr = cyclic_reduce(t);
      if (cr.core.empty()) continue;
      terms_.push_back(std::move(cr.core));
      conjugators_.push_back(std::move(cr.conjugator));
    }
  }

  static Chain parse(std::string_view text, const Alphabet& alphabet = Alphabet::lowercase()) {
    std::vector<Word> terms;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
      std::size_t b = start, e = end;
      while (b < e && text[b] == ' ') ++b;
      while (e > b && text[e - 1] == ' ') --e;
      if (b == e) throw parse_error("empty chain term", b);
      try {
        terms.push_back(Word::parse(text.substr(b, e - b), alphabet));
      } catch (const parse_error& pe) {
        throw parse_error(pe.what(), b + pe.position);
      }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+') {
        flush(i);
        start = i + 1;
      }
    }
    flush(text.size());
    return Chain(std::move(terms));
  }

  const std::vector<Word>& terms() const { return terms_; }
  const std::vector<Word>& conjugators() const { return conjugators_; }

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const Word& t : terms_) n += t.size();
    return n;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i > 0) s += " + ";
      s += terms_[i].str();
    }
    return s;
  }

 private:
  std::vector<Word> terms_;
  std::vector<Word> conjugators_;
};

// True iff the per-generator signed exponent sums over all terms vanish.
inline bool is_boundary(const Chain& c) {
  std::array<long, 26> sums{};
  for (const Word& t : c.terms())
    for (Letter x : t) sums[static_cast<std::size_t>(x.gen - 'a')] += x.sgn;
  return std::all_of(sums.begin(), sums.end(), [](long v) { return v == 0; });
}

inline bool is_boundary_word(const Word& w) {
  const auto sums = exponent_sums(w);
  return std::all_of(sums.begin(), sums.end(), [](long v) { return v == 0; });
}

}  // namespace clgenus
