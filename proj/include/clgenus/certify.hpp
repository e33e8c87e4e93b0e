#pragma once

// The nu counting function over {a,b,c,d}: a signed sum of cyclic 2-gram
// counts (Brooks-style) that changes by at most 6 under one cyclic block
// interchange. The exhaustive sweep replaces the appendix enumeration: all
// four-block cases with 2-letter blocks (16^4) plus all three-block cases
// (4^6) covering an empty block, reporting the maximal delta and the
// delta-6 cases that cut a cc junction. nu gaps divided by 6 yield
// certified distance lower bounds with no search.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <span>
#include <string>

#include "clgenus/errors.hpp"
#include "clgenus/word.hpp"

namespace clgenus {

namespace detail {

inline void require_abcd_positive(const Word& w) {
  for (Letter x : w) {
    if (x.sgn < 0) throw domain_error("nu counters take positive words");
    if (x.gen < 'a' || x.gen > 'd')
      throw domain_error("nu counters are defined over the alphabet {a,b,c,d}");
  }
}

inline int nu_xy_span(char x, char y, std::span<const char> s) {
  const std::size_t n = s.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] == x && s[(i + 1) % n] == y) ++count;
  return count;
}

// nu_aa + nu_bc + nu_cd + nu_db - nu_ac - nu_cc - nu_dd - nu_da - nu_bb
inline int nu_total_span(std::span<const char> s) {
  return nu_xy_span('a', 'a', s) + nu_xy_span('b', 'c', s) + nu_xy_span('c', 'd', s) +
         nu_xy_span('d', 'b', s) - nu_xy_span('a', 'c', s) - nu_xy_span('c', 'c', s) -
         nu_xy_span('d', 'd', s) - nu_xy_span('d', 'a', s) - nu_xy_span('b', 'b', s);
}

}  // namespace detail

// Cyclic occurrences of xy in w, wraparound included.
inline int nu_xy(char x, char y, const Word& w) {
  detail::require_abcd_positive(w);
  const std::string s = w.str();
  return detail::nu_xy_span(x, y, std::span<const char>(s.data(), s.size()));
}

// All sixteen cyclic 2-gram counts; they sum to the word length.
struct NuProfile {
  std::array<int, 16> counts{};

  static NuProfile of(const Word& w) {
    detail::require_abcd_positive(w);
    NuProfile p;
    const std::string s = w.str();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
      ++p.counts[static_cast<std::size_t>(4 * (s[i] - 'a') + (s[(i + 1) % n] - 'a'))];
    return p;
  }

  int at(char x, char y) const {
    return counts[static_cast<std::size_t>(4 * (x - 'a') + (y - 'a'))];
  }

  long total() const {
    long t = 0;
    for (int c : counts) t += c;
    return t;
  }
};

inline int nu_total(const Word& w) {
  detail::require_abcd_positive(w);
  const std::string s = w.str();
  return detail::nu_total_span(std::span<const char>(s.data(), s.size()));
}

struct NuDeltaReport {
  int max_delta = 0;
  long delta_six_cc_cuts = 0;
  long cases_checked = 0;
};

// Sweeps nu(x1 x2 x3 x4) - nu(x1 x4 x3 x2) over all 2-letter blocks, then
// nu(z1 z2 z3) - nu(z1 z3 z2) for the empty-block shape. A delta-6 case
// "cuts a cc junction" when some junction the move separates has c on both
// sides.
inline NuDeltaReport exhaustive_delta_check() {
  static constexpr std::array<char, 4> kAlphabet{'a', 'b', 'c', 'd'};
  NuDeltaReport report;

  std::array<char, 8> x{}, y{};
  for (int bits = 0; bits < 65536; ++bits) {
    int v = bits;
    for (int i = 0; i < 8; ++i) {
      x[static_cast<std::size_t>(i)] = kAlphabet[static_cast<std::size_t>(v & 3)];
      v >>= 2;
    }
    // y = x1 x4 x3 x2 with 2-letter blocks
    y = {x[0], x[1], x[6], x[7], x[4], x[5], x[2], x[3]};
    const int delta = detail::nu_total_span(std::span<const char>(x.data(), 8)) -
                      detail::nu_total_span(std::span<const char>(y.data(), 8));
    report.max_delta = std::max(report.max_delta, delta);
    if (delta == 6) {
      const bool cc_cut = (x[1] == 'c' && x[2] == 'c') || (x[3] == 'c' && x[4] == 'c') ||
                          (x[5] == 'c' && x[6] == 'c') || (x[7] == 'c' && x[0] == 'c');
      if (cc_cut) ++report.delta_six_cc_cuts;
    }
    ++report.cases_checked;
  }

  std::array<char, 6> z{}, zy{};
  for (int bits = 0; bits < 4096; ++bits) {
    int v = bits;
    for (int i = 0; i < 6; ++i) {
      z[static_cast<std::size_t>(i)] = kAlphabet[static_cast<std::size_t>(v & 3)];
      v >>= 2;
    }
    zy = {z[0], z[1], z[4], z[5], z[2], z[3]};  // z1 z3 z2
    const int delta = detail::nu_total_span(std::span<const char>(z.data(), 6)) -
                      detail::nu_total_span(std::span<const char>(zy.data(), 6));
    report.max_delta = std::max(report.max_delta, delta);
    if (delta == 6) {
      const bool cc_cut = (z[1] == 'c' && z[2] == 'c') || (z[3] == 'c' && z[4] == 'c') ||
                          (z[5] == 'c' && z[0] == 'c');
      if (cc_cut) ++report.delta_six_cc_cuts;
    }
    ++report.cases_checked;
  }

  return report;
}

// ceil(|nu(v) - nu(w)| / 6): a certified lower bound on d_cbi(v, w) by
// telescoping the per-move bound.
inline long nu_lower_bound(const Word& v, const Word& w) {
  detail::require_abcd_positive(v);
  detail::require_abcd_positive(w);
  if (!is_related(v, w)) throw not_related_error("words are not related");
  const long gap = std::labs(static_cast<long>(nu_total(v)) - static_cast<long>(nu_total(w)));
  return (gap + 5) / 6;
}

}  // namespace clgenus
