#pragma once

// Constructive hardness-reduction encoders and decoders:
//   3-PARTITION            -> cyclic block interchange instance over {a,b,c,d}
//   {a,b,c,d} instances    -> binary alphabet via the lambda block encoding
//   CBI instance           -> single-word commutator length (cyclic conjugates)
//   exact bin packing      -> chain with genus 0 iff solvable
// plus the desk-scale instance library used by the verification suite.

#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clgenus/cbi.hpp"
#include "clgenus/certify.hpp"
#include "clgenus/errors.hpp"
#include "clgenus/word.hpp"

namespace clgenus {

struct ThreePartitionInstance {
  int n = 0;
  long target = 0;        // N: the per-triple sum
  std::vector<long> a;    // 3n sizes, each strictly between N/4 and N/2

  void validate() const {
    if (n < 1) throw invalid_instance_error("3-PARTITION needs n >= 1");
    if (static_cast<int>(a.size()) != 3 * n)
      throw invalid_instance_error("3-PARTITION needs exactly 3n sizes");
    long sum = 0;
    for (long v : a) {
      if (!(4 * v > target))
        throw invalid_instance_error("size " + std::to_string(v) + " violates N/4 < a_i");
      if (!(2 * v < target))
        throw invalid_instance_error("size " + std::to_string(v) + " violates a_i < N/2");
      sum += v;
    }
    if (sum != static_cast<long>(n) * target)
      throw invalid_instance_error("sizes sum to " + std::to_string(sum) + ", expected n*N = " +
                                   std::to_string(static_cast<long>(n) * target));
  }
};

struct EbpInstance {
  std::vector<long> sizes;
  long bins = 0;      // N
  long capacity = 0;  // B

  void validate() const {
    if (sizes.empty()) throw invalid_instance_error("EBP needs at least one size");
    if (bins < 1 || capacity < 1)
      throw invalid_instance_error("EBP needs positive bin count and capacity");
    long sum = 0;
    for (long v : sizes) {
      if (v < 1) throw invalid_instance_error("EBP sizes must be positive");
      sum += v;
    }
    if (sum != bins * capacity)
      throw invalid_instance_error("sizes sum to " + std::to_string(sum) +
                                   ", expected N*B = " + std::to_string(bins * capacity));
  }
};

struct CbiInstance {
  Word v;
  Word w;
  int k = 0;
};

namespace detail {

inline void append_run(std::vector<Letter>& out, char gen, long count) {
  for (long i = 0; i < count; ++i) out.push_back({gen, 1});
}

}  // namespace detail

// v = a^{n+1} (b c^{a_1} d)...(b c^{a_3n} d) b,  w = (a c^N d^3)^n a b^{3n+1},
// k = 3n. Solvable instances have d_cbi(v, w) = 3n.
inline CbiInstance encode_3p(const ThreePartitionInstance& inst) {
  inst.validate();
  std::vector<Letter> v;
  detail::append_run(v, 'a', inst.n + 1);
  for (long size : inst.a) {
    v.push_back({'b', 1});
    detail::append_run(v, 'c', size);
    v.push_back({'d', 1});
  }
  v.push_back({'b', 1});

  std::vector<Letter> w;
  for (int i = 0; i < inst.n; ++i) {
    w.push_back({'a', 1});
    detail::append_run(w, 'c', inst.target);
    detail::append_run(w, 'd', 3);
  }
  w.push_back({'a', 1});
  detail::append_run(w, 'b', 3 * inst.n + 1);

  CbiInstance out{Word(std::move(v)), Word(std::move(w)), 3 * inst.n};
  if (!is_related(out.v, out.w))
    throw std::logic_error("3-PARTITION encoding produced unrelated words");
  return out;
}

namespace detail {

// Single move taking the contiguous block [s, e) of cur to the position
// immediately after anchor. Rotating to the block start makes the word
// X Z1 Z2 with Z1 ending at the anchor; cutting (0, |X|, |X|+|Z1|) emits
// Z2 Z1 X, which is cyclically Z1 X Z2.
inline BlockInterchange move_block_after(std::size_t n, int s, int e, int anchor) {
  const int len = static_cast<int>(n);
  const int block = (e - s + len) % len;
  const int z1 = (anchor + 1 - e + 2 * len) % len;
  return {s, {0, block, block + z1}};
}

}  // namespace detail

// Turns a 3-PARTITION solution (n triples of 0-based indices into a) into a
// verified interchange sequence of length exactly 3n from v to w. Each triple
// fills one gap of the a-run: its c^{a_i} d pieces are inserted in order,
// each new piece just after the previous piece's last c, so the c runs merge
// and the three d's end up adjacent.
inline InterchangeSequence decode_3p_solution(const ThreePartitionInstance& inst,
                                              const std::vector<std::array<int, 3>>& triples) {
  inst.validate();
  if (static_cast<int>(triples.size()) != inst.n)
    throw not_a_solution_error("expected exactly n triples");
  std::vector<bool> used(static_cast<std::size_t>(3 * inst.n), false);
  for (const auto& t : triples) {
    long sum = 0;
    for (int idx : t) {
      if (idx < 0 || idx >= 3 * inst.n)
        throw not_a_solution_error("index " + std::to_string(idx) + " out of range");
      if (used[static_cast<std::size_t>(idx)])
        throw not_a_solution_error("index " + std::to_string(idx) + " used twice");
      used[static_cast<std::size_t>(idx)] = true;
      sum += inst.a[static_cast<std::size_t>(idx)];
    }
    if (sum != inst.target)
      throw not_a_solution_error("triple sums to " + std::to_string(sum) + ", expected " +
                                 std::to_string(inst.target));
  }

  const CbiInstance enc = encode_3p(inst);
  const std::size_t n = enc.v.size();

  // Original v-positions: the a-run is 0..n_inst, block i starts after it.
  std::vector<int> piece_begin(inst.a.size()), piece_end(inst.a.size());
  {
    int pos = inst.n + 1;
    for (std::size_t i = 0; i < inst.a.size(); ++i) {
      piece_begin[i] = pos + 1;  // skip the leading b of the block
      piece_end[i] = pos + 2 + static_cast<int>(inst.a[i]);
      pos = piece_end[i];
    }
  }

  // Slots carry their original v-position as a tag through every move.
  std::vector<int> tags(n);
  std::iota(tags.begin(), tags.end(), 0);
  auto locate = [&](int tag) {
    for (std::size_t p = 0; p < n; ++p)
      if (tags[p] == tag) return static_cast<int>(p);
    throw std::logic_error("decode_3p_solution lost a tagged letter");
  };

  InterchangeSequence seq{enc.v, {}};
  Word cur = enc.v;
  for (int t = 0; t < inst.n; ++t) {
    int anchor_tag = t;  // the a opening gap t (original position t)
    for (int idx : triples[static_cast<std::size_t>(t)]) {
      const int begin = locate(piece_begin[static_cast<std::size_t>(idx)]);
      const int end = begin + (piece_end[static_cast<std::size_t>(idx)] -
                               piece_begin[static_cast<std::size_t>(idx)]);
      const int anchor = locate(anchor_tag);
      const BlockInterchange move =
          detail::move_block_after(n, begin, end % static_cast<int>(n), anchor);
      const std::vector<int> reloc = interchange_position_map(n, move);
      std::vector<int> next_tags(n);
      for (std::size_t p = 0; p < n; ++p)
        next_tags[static_cast<std::size_t>(reloc[p])] = tags[p];
      tags = std::move(next_tags);
      cur = apply_interchange(cur, move);
      seq.moves.push_back(move);
      // next piece goes after this piece's last c
      anchor_tag = piece_end[static_cast<std::size_t>(idx)] - 2;
    }
  }

  if (!verify_sequence(enc.v, enc.w, seq))
    throw std::logic_error("decoded 3-PARTITION witness failed verification");
  return seq;
}

namespace detail {

inline int lambda_exponent(char gen) {
  switch (gen) {
    case 'a': return 2;
    case 'b': return 3;
    case 'c': return 4;
    case 'd': return 5;
    default: throw domain_error("lambda encoding is defined over {a,b,c,d}");
  }
}

inline long lambda_block_length(char gen, long reps) { return reps * (2 + lambda_exponent(gen)); }

}  // namespace detail

// Letter-to-block substitution into {x,y}: each letter becomes
// (x y^eps x)^(4n^2+1) with eps = 2,3,4,5 for a,b,c,d. Preserves relatedness.
inline Word lambda_encode(const Word& v) {
  detail::require_abcd_positive(v);
  const long n = static_cast<long>(v.size());
  const long reps = 4 * n * n + 1;
  std::vector<Letter> out;
  for (Letter l : v) {
    const int eps = detail::lambda_exponent(l.gen);
    for (long r = 0; r < reps; ++r) {
      out.push_back({'x', 1});
      for (int e = 0; e < eps; ++e) out.push_back({'y', 1});
      out.push_back({'x', 1});
    }
  }
  return Word(std::move(out));
}

// The move on lambda(v) matching a move on v: rotation and cuts are mapped to
// the boundaries of the encoded blocks, so apply and lambda commute letter
// for letter.
inline BlockInterchange lift_interchange(const Word& v, const BlockInterchange& m) {
  detail::require_abcd_positive(v);
  const std::size_t n = v.size();
  detail::check_cuts(m, n);
  if (n == 0) return m;
  const long reps = 4 * static_cast<long>(n) * static_cast<long>(n) + 1;
  const int rot = detail::normalized_rotation(m.rotation, n);

  auto prefix_length = [&](const Word& u, int count) {
    long len = 0;
    for (int i = 0; i < count; ++i)
      len += detail::lambda_block_length(u[static_cast<std::size_t>(i)].gen, reps);
    return len;
  };

  const Word rotated_v = rotated(v, static_cast<std::size_t>(rot));
  BlockInterchange lifted;
  lifted.rotation = static_cast<int>(prefix_length(v, rot));
  for (int i = 0; i < 3; ++i)
    lifted.cuts[static_cast<std::size_t>(i)] =
        static_cast<int>(prefix_length(rotated_v, m.cuts[static_cast<std::size_t>(i)]));
  return lifted;
}

// All |w| words v . wtilde^-1 over the cyclic conjugates wtilde of w, emitted
// unreduced for the raw Bardakov mode; the minimum of cl over the list equals
// d_cbi(v, w).
inline std::vector<Word> cbi_to_cl_single(const Word& v, const Word& w) {
  if (!is_related(v, w)) throw not_related_error("words are not related");
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) out.push_back(concat(v, invert(rotated(w, r))));
  return out;
}

// c = [a, b^{n_1}] + ... + [a, b^{n_k}] + [a^N, b^B]^{-1}; solvable iff the
// chain has genus 0.
inline Chain encode_ebp(const EbpInstance& inst) {
  inst.validate();
  std::vector<Word> terms;
  const Word a = Word::parse("a");
  const Word b = Word::parse("b");
  for (long size : inst.sizes)
    terms.push_back(commutator(a, repeated(b, static_cast<int>(size))));
  terms.push_back(invert(commutator(repeated(a, static_cast<int>(inst.bins)),
                                    repeated(b, static_cast<int>(inst.capacity)))));
  return Chain(std::move(terms));
}

// Desk-scale instance library: the smallest windows N/4 < a_i < N/2 allow.
struct ShippedThreePartition {
  std::string name;
  ThreePartitionInstance instance;
  std::vector<std::array<int, 3>> solution;  // empty when unsolvable
  bool solvable = false;
};

inline const std::vector<ShippedThreePartition>& shipped_3p_instances() {
  static const std::vector<ShippedThreePartition> library = {
      {"solvable-n1", {1, 12, {4, 4, 4}}, {{{0, 1, 2}}}, true},
      {"solvable-n2", {2, 12, {4, 4, 4, 4, 4, 4}}, {{{0, 1, 2}}, {{3, 4, 5}}}, true},
      {"unsolvable-n2", {2, 16, {5, 5, 5, 5, 5, 7}}, {}, false},
  };
  return library;
}

struct ShippedEbp {
  std::string name;
  EbpInstance instance;
  bool solvable = false;
};

inline const std::vector<ShippedEbp>& shipped_ebp_instances() {
  static const std::vector<ShippedEbp> library = {
      {"solvable", {{1, 2}, 1, 3}, true},
      {"unsolvable", {{1, 3}, 2, 2}, false},
  };
  return library;
}

}  // namespace clgenus
