#pragma once

// Fialkovski-Ivanov interchange decompositions: a cyclically reduced word in
// the commutator subgroup admits a no-cancellation presentation
//
//   w = w1 x^-1 w2 y^-1 w3 x w4 y w5
//
// such that peeling one commutator leaves the remainder w1 w4 w3 w2 w5 with
// commutator length exactly one less. Iterating gives an explicit
// factorization, and depth-k recursion decides cl(w) <= k in time O(|w|^4k).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clgenus/errors.hpp"
#include "clgenus/genus.hpp"
#include "clgenus/word.hpp"

namespace clgenus {

struct FIDecomposition {
  std::array<std::size_t, 4> positions{};  // p1 < p2 < p3 < p4
  Letter x, y;                             // letters at p3 and p4
  std::array<Word, 5> segments;            // w1..w5
};

// Enumerates position quadruples (p1,p2,p3,p4) with the x^-1 / y^-1 / x / y
// pattern in lexicographic order. The callback returns false to stop;
// for_each_decomposition returns false iff it was stopped early.
template <class F>
bool for_each_decomposition(const Word& w, F&& f) {
  if (!is_cyclically_reduced(w))
    throw precondition_error("decomposition search needs a cyclically reduced word");
  const std::size_t n = w.size();
  if (n < 4) return true;
  for (std::size_t p1 = 0; p1 + 3 < n; ++p1)
    for (std::size_t p2 = p1 + 1; p2 + 2 < n; ++p2)
      for (std::size_t p3 = p2 + 1; p3 + 1 < n; ++p3) {
        if (!mutually_inverse(w[p1], w[p3])) continue;
        for (std::size_t p4 = p3 + 1; p4 < n; ++p4) {
          if (!mutually_inverse(w[p2], w[p4])) continue;
          FIDecomposition d;
          d.positions = {p1, p2, p3, p4};
          d.x = w[p3];
          d.y = w[p4];
          d.segments = {subword(w, 0, p1), subword(w, p1 + 1, p2), subword(w, p2 + 1, p3),
                        subword(w, p3 + 1, p4), subword(w, p4 + 1, n)};
          if (!f(static_cast<const FIDecomposition&>(d))) return false;
        }
      }
  return true;
}

inline std::vector<FIDecomposition> find_decompositions(const Word& w) {
  std::vector<FIDecomposition> out;
  for_each_decomposition(w, [&](const FIDecomposition& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

// w1 w4 w3 w2 w5, freely reduced: the word with cl one less.
inline Word interchange_remainder(const FIDecomposition& d) {
  const auto& s = d.segments;
  return free_reduce(concat(concat(concat(s[0], s[3]), concat(s[2], s[1])), s[4]));
}

struct AppliedDecomposition {
  Word remainder;
  std::pair<Word, Word> pair;  // [pair.first, pair.second] . remainder == w
};

// The explicit peeled commutator. With u = w1 x^-1 w3^-1 w4^-1 w1^-1 and
// t = w1 w4 w3 w2 y^-1 w4^-1 w1^-1 the identity
//   w = u t u^-1 t^-1 . w1 w4 w3 w2 w5
// holds letter-exactly (every inner product telescopes).
inline AppliedDecomposition apply_decomposition(const FIDecomposition& d) {
  const auto& s = d.segments;
  const Word xinv(std::vector<Letter>{inverse(d.x)});
  const Word yinv(std::vector<Letter>{inverse(d.y)});
  Word u = concat(concat(s[0], xinv), concat(concat(invert(s[2]), invert(s[3])), invert(s[0])));
  Word t = concat(concat(concat(s[0], s[3]), concat(s[2], s[1])),
                  concat(yinv, concat(invert(s[3]), invert(s[0]))));
  return {interchange_remainder(d), {free_reduce(u), free_reduce(t)}};
}

namespace detail {

template <class F>
bool any_decomposition_with_rotations(const Word& core, F&& f) {
  // Linear word first; rotations only when the linear sweep finds nothing
  // (the theorem fixes no basepoint and cl is rotation invariant).
  for (std::size_t r = 0; r < std::max<std::size_t>(core.size(), 1); ++r) {
    bool hit = false;
    const Word u = r == 0 ? core : rotated(core, r);
    for_each_decomposition(u, [&](const FIDecomposition& d) {
      hit = f(u, r, d);
      return !hit;
    });
    if (hit) return true;
  }
  return false;
}

inline bool decide_core(const Word& core, int k) {
  if (core.empty()) return true;
  if (k <= 0) return false;
  return any_decomposition_with_rotations(core, [&](const Word&, std::size_t,
                                                    const FIDecomposition& d) {
    return decide_core(cyclic_reduce(interchange_remainder(d)).core, k - 1);
  });
}

}  // namespace detail

// cl(w) <= k, by depth-k decomposition recursion.
inline bool decide_cl_leq(const Word& w, int k) {
  const Word r = free_reduce(w);
  if (!is_boundary_word(r)) throw not_boundary_error("word is not in the commutator subgroup");
  return detail::decide_core(cyclic_reduce(r).core, k);
}

struct CommutatorFactorization {
  std::vector<std::pair<Word, Word>> pairs;
  Word tail;
};

// [u1,t1]...[um,tm] . tail, freely reduced.
inline Word factorization_product(const CommutatorFactorization& f) {
  Word acc;
  for (const auto& [u, t] : f.pairs) acc = concat(acc, commutator(u, t));
  return free_reduce(concat(acc, f.tail));
}

// Full factorization of length exactly cl(w). Every step picks the first
// decomposition (lexicographic, linear word before rotations) whose
// remainder has genus one less, checked exactly via the orbit search.
inline CommutatorFactorization factorize(const Word& w, const SearchOptions& opts = {}) {
  Word cur = free_reduce(w);
  if (!is_boundary_word(cur)) throw not_boundary_error("word is not in the commutator subgroup");
  CommutatorFactorization out;
  int genus = -1;
  while (!cur.empty()) {
    const CyclicReduction cr = cyclic_reduce(cur);
    if (genus < 0) genus = cl_word(cr.core, opts);
    const int want = genus - 1;
    const bool found = detail::any_decomposition_with_rotations(
        cr.core, [&](const Word&, std::size_t r, const FIDecomposition& d) {
          if (cl_word(interchange_remainder(d), opts) != want) return false;
          const AppliedDecomposition ad = apply_decomposition(d);
          const Word c = concat(cr.conjugator, subword(cr.core, 0, r));
          out.pairs.emplace_back(conjugated(ad.pair.first, c), conjugated(ad.pair.second, c));
          cur = conjugated(ad.remainder, c);
          return true;
        });
    if (!found)
      throw std::logic_error("no genus-reducing decomposition found for " + cr.core.str());
    genus = want;
  }
  out.tail = Word{};
  return out;
}

}  // namespace clgenus
