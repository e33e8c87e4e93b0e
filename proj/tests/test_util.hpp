#pragma once

// Shared helpers for the suites: deterministic word generators and a popen
// wrapper for driving the CLI binary.

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "clgenus/word.hpp"

namespace testutil {

using clgenus::Letter;
using clgenus::Word;

inline Word random_positive(std::mt19937& rng, std::size_t len, int alphabet_size) {
  std::uniform_int_distribution<int> pick(0, alphabet_size - 1);
  std::vector<Letter> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    v.push_back({static_cast<char>('a' + pick(rng)), 1});
  return Word(std::move(v));
}

// Freely reduced word over {a,b}; not necessarily cyclically reduced.
inline Word random_reduced(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> v;
  while (v.size() < len) {
    const int c = pick(rng);
    const Letter l{static_cast<char>('a' + c / 2), static_cast<std::int8_t>(c % 2 == 0 ? 1 : -1)};
    if (!v.empty() && clgenus::mutually_inverse(v.back(), l)) continue;
    v.push_back(l);
  }
  return Word(std::move(v));
}

// Balanced multiset over {a,A,b,B} shuffled and freely reduced: a sample from
// the commutator subgroup of length at most 2*max_half_pairs.
inline Word random_boundary(std::mt19937& rng, std::size_t max_half_pairs) {
  while (true) {
    std::uniform_int_distribution<std::size_t> pick_p(0, max_half_pairs);
    const std::size_t p = pick_p(rng);
    std::uniform_int_distribution<std::size_t> pick_q(0, max_half_pairs - p);
    const std::size_t q = pick_q(rng);
    if (p + q == 0) continue;
    std::vector<Letter> v;
    for (std::size_t i = 0; i < p; ++i) {
      v.push_back({'a', 1});
      v.push_back({'a', -1});
    }
    for (std::size_t i = 0; i < q; ++i) {
      v.push_back({'b', 1});
      v.push_back({'b', -1});
    }
    std::shuffle(v.begin(), v.end(), rng);
    Word w = clgenus::free_reduce(Word(std::move(v)));
    if (!w.empty()) return w;
  }
}

// Two positive words with the same letter multiset.
inline std::pair<Word, Word> random_related_pair(std::mt19937& rng, std::size_t len,
                                                 int alphabet_size) {
  Word v = random_positive(rng, len, alphabet_size);
  std::vector<Letter> letters = v.letters();
  std::shuffle(letters.begin(), letters.end(), rng);
  return {v, Word(std::move(letters))};
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

inline CommandResult run_command(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CommandResult r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testutil
