#pragma once

// Cyclic block interchange distance on related positive words.
//
// A move rotates the word, cuts it into four blocks w1 w2 w3 w4 and emits
// w1 w4 w3 w2. The distance equals cl(v + w^-1), computed by the orbit
// search; an optimal move sequence is extracted constructively by orbit
// surgery: starting from an orbit-maximal pairing, every step locates the
// cyclically ordered triple/quadruple of the "orbits of alpha" lemma, applies
// the corresponding block interchange, and transports the pairing along it,
// which raises the orbit count by exactly two (asserted at runtime).
// An independent breadth-first oracle over canonical rotations covers desk
// scale.

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clgenus/errors.hpp"
#include "clgenus/genus.hpp"
#include "clgenus/word.hpp"

namespace clgenus {

struct BlockInterchange {
  int rotation = 0;            // applied before cutting
  std::array<int, 3> cuts{};   // 0 <= i1 <= i2 <= i3 <= n

  friend bool operator==(const BlockInterchange&, const BlockInterchange&) = default;
};

namespace detail {

inline int normalized_rotation(int rotation, std::size_t n) {
  if (n == 0) return 0;
  const int m = static_cast<int>(n);
  return ((rotation % m) + m) % m;
}

inline void check_cuts(const BlockInterchange& m, std::size_t n) {
  const auto [c1, c2, c3] = m.cuts;
  if (c1 < 0 || c1 > c2 || c2 > c3 || c3 > static_cast<int>(n))
    throw out_of_bounds_error("block interchange cuts out of range");
}

}  // namespace detail

// Position map of a move: new position of the letter at each old position.
inline std::vector<int> interchange_position_map(std::size_t n, const BlockInterchange& m) {
  detail::check_cuts(m, n);
  const int rot = detail::normalized_rotation(m.rotation, n);
  const auto [c1, c2, c3] = m.cuts;
  const int len = static_cast<int>(n);
  std::vector<int> map(n);
  for (int p = 0; p < len; ++p) {
    const int q = (p - rot + len) % len;  // position in the rotated word
    int out;
    if (q < c1)
      out = q;                            // w1 stays put
    else if (q < c2)
      out = q + len - c2;                 // w2 moves to the end
    else if (q < c3)
      out = q + c1 - c2 + len - c3;       // w3 shifts by the size difference
    else
      out = q - c3 + c1;                  // w4 moves up behind w1
    map[static_cast<std::size_t>(p)] = out;
  }
  return map;
}

inline Word apply_interchange(const Word& v, const BlockInterchange& m) {
  if (!v.positive()) throw domain_error("block interchanges act on positive words");
  detail::check_cuts(m, v.size());
  const auto map = interchange_position_map(v.size(), m);
  std::vector<Letter> out(v.size());
  for (std::size_t p = 0; p < v.size(); ++p) out[static_cast<std::size_t>(map[p])] = v[p];
  return Word(std::move(out));
}

struct InterchangeSequence {
  Word start;
  std::vector<BlockInterchange> moves;
};

// True iff the sequence starts at v and ends, move by move, at a word equal
// to w as a cyclic word. Malformed moves make it false, never throw.
inline bool verify_sequence(const Word& v, const Word& w, const InterchangeSequence& s) {
  if (!(s.start == v)) return false;
  Word cur = v;
  for (const BlockInterchange& m : s.moves) {
    try {
      cur = apply_interchange(cur, m);
    } catch (const error&) {
      return false;
    }
  }
  return CyclicWord(cur) == CyclicWord(w);
}

namespace detail {

inline void require_related(const Word& v, const Word& w) {
  if (!is_related(v, w)) throw not_related_error("words are not related");
}

}  // namespace detail

inline int d_cbi(const Word& v, const Word& w, const SearchOptions& opts = {}) {
  detail::require_related(v, w);
  if (CyclicWord(v) == CyclicWord(w)) return 0;
  return cl_chain(Chain({v, invert(w)}), opts).genus;
}

// The index permutations of the two move shapes, acting on the positions of v
// (I+) and fixing the w side (I-). Built from block-interchange semantics:
// two-block is v1 v2 v3 -> v1 v3 v2, three-block is v1 v2 v3 v4 -> v1 v4 v3 v2.
struct GammaMap {
  enum class Kind { two_block, three_block };

  Kind kind = Kind::two_block;
  int i1 = 0, i2 = 0, i3 = 0;
  std::size_t n = 0;

  static GammaMap two_block(int i1, int i2, std::size_t n) {
    return {Kind::two_block, i1, i2, 0, n};
  }
  static GammaMap three_block(int i1, int i2, int i3, std::size_t n) {
    return {Kind::three_block, i1, i2, i3, n};
  }

  // The move realizing the permutation (rotation prepended by the caller).
  BlockInterchange interchange(int rotation = 0) const {
    if (kind == Kind::two_block) return {rotation, {i1, i2, i2}};
    return {rotation, {i1, i2, i3}};
  }

  std::vector<int> index_map() const { return interchange_position_map(n, interchange()); }
};

namespace detail {

// alpha = sigma . pi on I+ u I- for the chain v + w^-1; pv maps v-positions
// to w-positions, pw is its inverse. I- is offset by n.
struct AlphaView {
  const std::vector<int>& pv;
  const std::vector<int>& pw;
  int n;

  int operator()(int x) const {
    if (x < n) return n + (pv[static_cast<std::size_t>(x)] + n - 1) % n;
    return (pw[static_cast<std::size_t>(x - n)] + 1) % n;
  }

  int orbits() const {
    std::vector<bool> seen(static_cast<std::size_t>(2 * n), false);
    int count = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++count;
      for (int x = s; !seen[static_cast<std::size_t>(x)]; x = (*this)(x))
        seen[static_cast<std::size_t>(x)] = true;
    }
    return count;
  }

  std::vector<int> orbit_ids() const {
    std::vector<int> id(static_cast<std::size_t>(2 * n), -1);
    int next = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (id[static_cast<std::size_t>(s)] != -1) continue;
      for (int x = s; id[static_cast<std::size_t>(x)] == -1; x = (*this)(x))
        id[static_cast<std::size_t>(x)] = next;
      ++next;
    }
    return id;
  }

  // alpha^2 restricted to I+.
  std::vector<int> alpha_squared() const {
    std::vector<int> a2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a2[static_cast<std::size_t>(i)] = (*this)((*this)(i));
    return a2;
  }
};

}  // namespace detail

// Optimal move sequence from v to (a rotation of) w, of length exactly
// d_cbi(v, w). Needs one orbit-maximal pairing up front; every subsequent
// step is pure surgery and keeps the transported pairing optimal.
inline InterchangeSequence extract_sequence(const Word& v, const Word& w,
                                            const SearchOptions& opts = {}) {
  detail::require_related(v, w);
  InterchangeSequence seq{v, {}};
  const int n = static_cast<int>(v.size());
  if (n == 0 || CyclicWord(v) == CyclicWord(w)) return seq;

  // Flat genus indices: 0..n-1 = v, n..2n-1 = the word w^-1, whose position j
  // holds the inverse of w[n-1-j]. Convert the witness to v-pos -> w-pos.
  const OrbitSearchResult search = max_orbits(Chain({v, invert(w)}), opts);
  std::vector<int> pv(static_cast<std::size_t>(n)), pw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pv[static_cast<std::size_t>(i)] = 2 * n - 1 - search.witness(i);
    pw[static_cast<std::size_t>(pv[static_cast<std::size_t>(i)])] = i;
  }

  Word cur = v;
  int orbits = detail::AlphaView{pv, pw, n}.orbits();
  while (true) {
    const detail::AlphaView alpha{pv, pw, n};
    const std::vector<int> a2 = alpha.alpha_squared();

    // Minimal witness of alpha^2 != id: i0 with the least cyclic gap M.
    int i0 = -1, gap = n + 1;
    for (int i = 0; i < n; ++i) {
      if (a2[static_cast<std::size_t>(i)] == i) continue;
      const int d = (a2[static_cast<std::size_t>(i)] - i + n) % n;
      if (d < gap) {
        gap = d;
        i0 = i;
      }
    }
    if (i0 < 0) break;  // alpha^2 == id: cur is a rotation of w

    // Secondary point: first non-fixed position after i0.
    int offset = 0;
    for (int k = 1; k < n; ++k) {
      if (a2[static_cast<std::size_t>((i0 + k) % n)] != (i0 + k) % n) {
        offset = k;
        break;
      }
    }
    if (offset < 1 || offset > gap - 1)
      throw std::logic_error("orbit surgery: secondary point not inside the minimal arc");
    const int i1 = (i0 + offset) % n;

    const std::vector<int> ids = alpha.orbit_ids();
    GammaMap gamma{};
    if (ids[static_cast<std::size_t>(i0)] == ids[static_cast<std::size_t>(i1)]) {
      gamma = GammaMap::two_block(offset, gap, static_cast<std::size_t>(n));
    } else {
      const int i3 = a2[static_cast<std::size_t>(i1)];
      const int rel = (i3 - i0 + n) % n;
      if (rel <= gap)
        throw std::logic_error("orbit surgery: quadruple is not cyclically ordered");
      gamma = GammaMap::three_block(offset, gap, rel, static_cast<std::size_t>(n));
    }

    const BlockInterchange move = gamma.interchange(i0);
    const std::vector<int> reloc = interchange_position_map(static_cast<std::size_t>(n), move);
    std::vector<int> new_pv(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      new_pv[static_cast<std::size_t>(reloc[static_cast<std::size_t>(p)])] =
          pv[static_cast<std::size_t>(p)];
    pv = std::move(new_pv);
    for (int i = 0; i < n; ++i) pw[static_cast<std::size_t>(pv[static_cast<std::size_t>(i)])] = i;

    cur = apply_interchange(cur, move);
    seq.moves.push_back(move);

    const int now = detail::AlphaView{pv, pw, n}.orbits();
    if (now != orbits + 2)
      throw std::logic_error("orbit surgery did not raise the orbit count by two");
    orbits = now;
  }

  if (!(CyclicWord(cur) == CyclicWord(w)))
    throw std::logic_error("orbit surgery terminated away from the target word");
  return seq;
}

// Exact distance by breadth-first search over canonical rotations; the
// independent desk-scale oracle. Returns nullopt once the cap is exceeded.
inline std::optional<int> oracle_bfs(const Word& v, const Word& w,
                                     std::optional<int> cap = std::nullopt) {
  detail::require_related(v, w);
  const std::size_t n = v.size();
  if (n > 12) throw size_guard_error("oracle_bfs is guarded to words of length <= 12");
  const int limit = cap.value_or(static_cast<int>(n));
  if (limit < 0) throw domain_error("oracle_bfs cap must be nonnegative");

  const std::string target = CyclicWord(w).canonical().str();
  const std::string source = CyclicWord(v).canonical().str();
  if (source == target) return 0;
  if (limit == 0) return std::nullopt;

  std::unordered_map<std::string, int> dist{{source, 0}};
  std::deque<std::string> frontier{source};
  const int len = static_cast<int>(n);
  while (!frontier.empty()) {
    const std::string cur = std::move(frontier.front());
    frontier.pop_front();
    const int d = dist[cur];
    if (d == limit) continue;
    const Word u = Word::parse(cur);
    for (int rot = 0; rot < len; ++rot) {
      for (int c1 = 0; c1 <= len; ++c1)
        for (int c2 = c1; c2 <= len; ++c2)
          for (int c3 = c2; c3 <= len; ++c3) {
            const Word next = apply_interchange(u, {rot, {c1, c2, c3}});
            std::string key = CyclicWord(next).canonical().str();
            if (key == target) return d + 1;
            if (dist.emplace(key, d + 1).second) frontier.push_back(std::move(key));
          }
    }
  }
  return std::nullopt;
}

}  // namespace clgenus
