#pragma once

// Exact commutator length of chains via Bardakov's pairing/orbit formula
//
//   cl(w) = |w|/4 - o/2 + (2-k)/2,   o = max orb(sigma . pi) over pairings pi,
//
// computed by exhaustive matching search with branch-and-bound pruning, plus
// the linear-time certificate verifier that makes the problem an NP member.
//
// The search maintains the partial functional graph of alpha = sigma . pi in a
// union-find with rollback. Pairing positions x<->y adds the alpha-edges
// x -> sigma(y) and y -> sigma(x); an edge whose endpoints already share a
// component closes one cycle. Each unassigned position contributes exactly one
// future edge and each edge closes at most one cycle, so
//   final orbits  <=  closed cycles so far + unassigned positions,
// which is the pruning bound. (A single pair can close two cycles, so the
// bound cannot be halved.)

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "clgenus/errors.hpp"
#include "clgenus/word.hpp"

namespace clgenus {

// Flattened index set of a chain: positions 0..L-1 with per-term offsets and
// the permutation sigma advancing cyclically within each term.
struct IndexedChain {
  std::vector<Letter> letters;
  std::vector<int> sigma;
  int term_count = 0;

  static IndexedChain of(const Chain& c) {
    IndexedChain ic;
    ic.term_count = static_cast<int>(c.terms().size());
    for (const Word& t : c.terms()) {
      const int off = static_cast<int>(ic.letters.size());
      const int n = static_cast<int>(t.size());
      for (int i = 0; i < n; ++i) {
        ic.letters.push_back(t[static_cast<std::size_t>(i)]);
        ic.sigma.push_back(i + 1 < n ? off + i + 1 : off);
      }
    }
    return ic;
  }

  // Single term taken verbatim, reduced or not (the unreduced-input mode of
  // the single-word reduction).
  static IndexedChain raw_word(const Word& w) {
    IndexedChain ic;
    ic.term_count = 1;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
      ic.letters.push_back(w[static_cast<std::size_t>(i)]);
      ic.sigma.push_back((i + 1) % n);
    }
    return ic;
  }
};

// Fixed-point-free inverse-matching involution on 0..L-1. The validating
// constructor checks shape (involution, no fixed point); letter matching is
// checked against a concrete chain by check_certificate.
class Pairing {
 public:
  Pairing() = default;

  explicit Pairing(std::vector<int> map) : map_(std::move(map)) {
    const int L = static_cast<int>(map_.size());
    for (int i = 0; i < L; ++i) {
      if (map_[static_cast<std::size_t>(i)] < 0 || map_[static_cast<std::size_t>(i)] >= L ||
          map_[static_cast<std::size_t>(map_[static_cast<std::size_t>(i)])] != i)
        throw domain_error("pairing is not an involution on the index set");
      if (map_[static_cast<std::size_t>(i)] == i)
        throw domain_error("pairing has a fixed point");
    }
  }

  static Pairing unchecked(std::vector<int> map) {
    Pairing p;
    p.map_ = std::move(map);
    return p;
  }

  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return map_.size(); }
  const std::vector<int>& map() const { return map_; }

 private:
  std::vector<int> map_;
};

// Number of cycles of sigma . pi; linear in L.
inline int orbit_count(const std::vector<int>& sigma, const Pairing& pi) {
  if (sigma.size() != pi.size())
    throw domain_error("orbit_count: permutations live on different index sets");
  const int L = static_cast<int>(sigma.size());
  std::vector<bool> seen(static_cast<std::size_t>(L), false);
  int orbits = 0;
  for (int s = 0; s < L; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++orbits;
    int x = s;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      x = sigma[static_cast<std::size_t>(pi(x))];
    }
  }
  return orbits;
}

// Bardakov's formula. Throws if the value is not a nonnegative integer, which
// cannot happen for a genuine pairing (all pairings of a chain differ by even
// permutations, so the orbit parity is constant).
inline int genus_from_orbits(std::size_t total_length, int term_count, int orbits) {
  const long t = static_cast<long>(total_length) / 2 - orbits + 2 - term_count;
  if (total_length % 2 != 0 || t < 0 || t % 2 != 0)
    throw std::logic_error("Bardakov formula integrality violated");
  return static_cast<int>(t / 2);
}

struct GenusCertificate {
  Pairing pairing;
  int orbits = 0;
  int genus = 0;
};

struct SearchOptions {
  int threads = 1;
  // Early exit once a pairing with at least this many orbits is found.
  std::optional<int> target_orbits;
  // Refuse chains longer than this (exponential search guard).
  std::optional<std::size_t> max_length;
};

struct OrbitSearchResult {
  int orbits = 0;
  Pairing witness;
};

namespace detail {

struct SharedIncumbent {
  std::atomic<int> orbits{-1};
  std::atomic<bool> stop{false};
  std::optional<int> target;
  std::mutex mu;
  std::vector<int> witness;
  int witness_orbits = -1;

  void offer(int o, const std::vector<int>& pi) {
    int prev = orbits.load(std::memory_order_relaxed);
    while (o > prev && !orbits.compare_exchange_weak(prev, o, std::memory_order_relaxed)) {
    }
    {
      std::lock_guard<std::mutex> lock(mu);
      if (o > witness_orbits) {
        witness_orbits = o;
        witness = pi;
      }
    }
    if (target && orbits.load(std::memory_order_relaxed) >= *target)
      stop.store(true, std::memory_order_relaxed);
  }

  int prune_floor() const {
    int f = orbits.load(std::memory_order_relaxed);
    if (target) f = std::max(f, *target - 1);
    return f;
  }
};

class PairingSearch {
 public:
  PairingSearch(const IndexedChain& ic, SharedIncumbent& shared)
      : sigma_(ic.sigma),
        term_count_(ic.term_count),
        shared_(shared),
        length_(static_cast<int>(ic.letters.size())) {
    pi_.assign(static_cast<std::size_t>(length_), -1);
    parent_.resize(static_cast<std::size_t>(length_));
    std::iota(parent_.begin(), parent_.end(), 0);
    rank_.assign(static_cast<std::size_t>(length_), 0);
    partners_.assign(static_cast<std::size_t>(length_), {});
    for (int x = 0; x < length_; ++x)
      for (int y = 0; y < length_; ++y)
        if (mutually_inverse(ic.letters[static_cast<std::size_t>(x)],
                             ic.letters[static_cast<std::size_t>(y)]))
          partners_[static_cast<std::size_t>(x)].push_back(y);
    unassigned_ = length_;
  }

  void run() { dfs(0); }

  // Explore only the subtree where position 0 is paired with y.
  void run_with_first(int y) {
    Step s;
    take(0, y, s);
    descend(0);
    undo(0, y, s);
  }

 private:
  struct Step {
    int closed_added = 0;
    std::array<int, 2> united{-1, -1};
    std::array<bool, 2> bumped{false, false};
  };

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  void add_edge(int from, int to, Step& s, int slot) {
    int a = find(from), b = find(to);
    if (a == b) {
      ++closed_;
      ++s.closed_added;
      return;
    }
    if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    s.united[static_cast<std::size_t>(slot)] = b;
    if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)]) {
      ++rank_[static_cast<std::size_t>(a)];
      s.bumped[static_cast<std::size_t>(slot)] = true;
    }
  }

  void take(int x, int y, Step& s) {
    pi_[static_cast<std::size_t>(x)] = y;
    pi_[static_cast<std::size_t>(y)] = x;
    unassigned_ -= 2;
    add_edge(x, sigma_[static_cast<std::size_t>(y)], s, 0);
    add_edge(y, sigma_[static_cast<std::size_t>(x)], s, 1);
  }

  void undo(int x, int y, const Step& s) {
    for (int slot : {1, 0}) {
      const int b = s.united[static_cast<std::size_t>(slot)];
      if (b < 0) continue;
      if (s.bumped[static_cast<std::size_t>(slot)])
        --rank_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(b)])];
      parent_[static_cast<std::size_t>(b)] = b;
    }
    closed_ -= s.closed_added;
    pi_[static_cast<std::size_t>(x)] = -1;
    pi_[static_cast<std::size_t>(y)] = -1;
    unassigned_ += 2;
  }

  void leaf() {
    // Per-pairing integrality assertion; see genus_from_orbits.
    (void)genus_from_orbits(static_cast<std::size_t>(length_), term_count_, closed_);
    shared_.offer(closed_, pi_);
  }

  void descend(int scan_from) {
    if (unassigned_ == 0) {
      leaf();
      return;
    }
    if (closed_ + unassigned_ > shared_.prune_floor()) dfs(scan_from + 1);
  }

  void dfs(int scan_from) {
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    int x = scan_from;
    while (x < length_ && pi_[static_cast<std::size_t>(x)] != -1) ++x;
    if (x == length_) {
      leaf();
      return;
    }
    for (int y : partners_[static_cast<std::size_t>(x)]) {
      if (pi_[static_cast<std::size_t>(y)] != -1) continue;
      Step s;
      take(x, y, s);
      descend(x);
      undo(x, y, s);
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const std::vector<int>& sigma_;
  int term_count_;
  SharedIncumbent& shared_;
  int length_;
  std::vector<int> pi_;
  std::vector<std::vector<int>> partners_;
  std::vector<int> parent_;
  std::vector<int> rank_;
  int closed_ = 0;
  int unassigned_ = 0;
};

inline OrbitSearchResult max_orbits_indexed(const IndexedChain& ic, const SearchOptions& opts) {
  const std::size_t L = ic.letters.size();
  if (opts.max_length && L > *opts.max_length)
    throw size_guard_error("chain length " + std::to_string(L) + " exceeds search guard " +
                           std::to_string(*opts.max_length));
  if (L == 0) return {0, Pairing::unchecked({})};

  SharedIncumbent shared;
  shared.target = opts.target_orbits;

  std::vector<int> first_candidates;
  for (int y = 1; y < static_cast<int>(L); ++y)
    if (mutually_inverse(ic.letters[0], ic.letters[static_cast<std::size_t>(y)]))
      first_candidates.push_back(y);
  if (first_candidates.empty())
    throw not_boundary_error("no inverse occurrence available for the first position");

  const int workers =
      std::max(1, std::min<int>(opts.threads, static_cast<int>(first_candidates.size())));
  if (workers == 1) {
    PairingSearch search(ic, shared);
    search.run();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          PairingSearch search(ic, shared);
          for (std::size_t i = static_cast<std::size_t>(t); i < first_candidates.size();
               i += static_cast<std::size_t>(workers))
            search.run_with_first(first_candidates[i]);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  if (shared.witness_orbits < 0) {
    // Only reachable in decision mode: every branch was pruned below the
    // target before completing a pairing. Without a target the very first
    // depth-first path always completes (a perfect matching exists for any
    // boundary chain).
    if (opts.target_orbits) return {-1, Pairing::unchecked({})};
    throw std::logic_error("orbit search completed no pairing");
  }
  return {shared.witness_orbits, Pairing::unchecked(std::move(shared.witness))};
}

}  // namespace detail

// Maximum of orb(sigma . pi) over all pairings, with an attaining witness.
// The orbit value is deterministic; the witness may differ between serial
// and parallel runs.
inline OrbitSearchResult max_orbits(const Chain& c, const SearchOptions& opts = {}) {
  if (!is_boundary(c)) throw not_boundary_error("chain is not a boundary");
  return detail::max_orbits_indexed(IndexedChain::of(c), opts);
}

inline GenusCertificate cl_chain(const Chain& c, const SearchOptions& opts = {}) {
  if (!is_boundary(c)) throw not_boundary_error("chain is not a boundary");
  if (c.terms().empty()) return {Pairing::unchecked({}), 0, 0};
  OrbitSearchResult r = detail::max_orbits_indexed(IndexedChain::of(c), opts);
  const int genus = genus_from_orbits(c.total_length(), static_cast<int>(c.terms().size()),
                                      r.orbits);
  return {std::move(r.witness), r.orbits, genus};
}

inline int cl_word(const Word& w, const SearchOptions& opts = {}) {
  return cl_chain(Chain({w}), opts).genus;
}

// Bardakov run directly on a single possibly unreduced word (the composed
// sigma is the plain cyclic shift on all positions, cancelling pairs
// included).
inline GenusCertificate cl_word_raw(const Word& w, const SearchOptions& opts = {}) {
  if (!is_boundary_word(w)) throw not_boundary_error("word is not in the commutator subgroup");
  if (w.empty()) return {Pairing::unchecked({}), 0, 0};
  OrbitSearchResult r = detail::max_orbits_indexed(IndexedChain::raw_word(w), opts);
  return {std::move(r.witness), r.orbits, genus_from_orbits(w.size(), 1, r.orbits)};
}

// Decision mode: cl(c) <= k, via early-exit search for the equivalent orbit
// target o >= |c|/2 + 2 - #terms - 2k.
inline bool cl_at_most(const Chain& c, int k, SearchOptions opts = {}) {
  if (k < 0) return false;
  if (!is_boundary(c)) throw not_boundary_error("chain is not a boundary");
  if (c.terms().empty()) return true;
  const long target = static_cast<long>(c.total_length()) / 2 + 2 -
                      static_cast<long>(c.terms().size()) - 2L * k;
  if (target <= 1) return true;  // any pairing has at least one orbit
  opts.target_orbits = static_cast<int>(target);
  return detail::max_orbits_indexed(IndexedChain::of(c), opts).orbits >= target;
}

enum class certificate_fault {
  ok,
  size_mismatch,
  not_involution,
  fixed_point,
  letter_mismatch,
  genus_above_bound,
};

inline const char* to_string(certificate_fault f) {
  switch (f) {
    case certificate_fault::ok: return "ok";
    case certificate_fault::size_mismatch: return "size mismatch";
    case certificate_fault::not_involution: return "not an involution";
    case certificate_fault::fixed_point: return "fixed point";
    case certificate_fault::letter_mismatch: return "pairs non-inverse letters";
    case certificate_fault::genus_above_bound: return "genus above bound";
  }
  return "unknown";
}

// Linear-time verifier of the NP witness: checks pairing shape, inverse
// matching and the formula value against the bound k.
inline certificate_fault check_certificate(const Chain& c, const std::vector<int>& map, int k) {
  const IndexedChain ic = IndexedChain::of(c);
  const int L = static_cast<int>(ic.letters.size());
  if (static_cast<int>(map.size()) != L) return certificate_fault::size_mismatch;
  for (int i = 0; i < L; ++i) {
    const int m = map[static_cast<std::size_t>(i)];
    if (m < 0 || m >= L || map[static_cast<std::size_t>(m)] != i)
      return certificate_fault::not_involution;
    if (m == i) return certificate_fault::fixed_point;
    if (!mutually_inverse(ic.letters[static_cast<std::size_t>(i)],
                          ic.letters[static_cast<std::size_t>(m)]))
      return certificate_fault::letter_mismatch;
  }
  const int o = orbit_count(ic.sigma, Pairing::unchecked(map));
  return genus_from_orbits(ic.letters.size(), ic.term_count, o) <= k
             ? certificate_fault::ok
             : certificate_fault::genus_above_bound;
}

inline bool verify_certificate(const Chain& c, const std::vector<int>& map, int k) {
  return check_certificate(c, map, k) == certificate_fault::ok;
}

inline bool verify_certificate(const Chain& c, const Pairing& p, int k) {
  return check_certificate(c, p.map(), k) == certificate_fault::ok;
}

}  // namespace clgenus
