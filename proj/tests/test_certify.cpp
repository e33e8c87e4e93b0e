#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <span>
#include <string>

#include "clgenus/cbi.hpp"
#include "clgenus/certify.hpp"
#include "clgenus/reduce.hpp"
#include "clgenus/word.hpp"
#include "test_util.hpp"

using namespace clgenus;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

BlockInterchange random_move(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pos(0, static_cast<int>(n));
  std::array<int, 3> cuts{pos(rng), pos(rng), pos(rng)};
  std::sort(cuts.begin(), cuts.end());
  return {static_cast<int>(rng() % std::max<std::size_t>(n, 1)), cuts};
}

}  // namespace

TEST_CASE("cyclic 2-gram counts") {
  CHECK(nu_xy('a', 'a', W("aaa")) == 3);
  CHECK(nu_xy('a', 'b', W("ba")) == 1);  // wraparound only
  CHECK(nu_xy('c', 'c', W("abcd")) == 0);
  CHECK(nu_xy('a', 'a', W("a")) == 1);
  CHECK_THROWS_AS(nu_xy('a', 'a', W("abe")), domain_error);
  CHECK_THROWS_AS(nu_xy('a', 'a', W("aBa")), domain_error);
}

TEST_CASE("profile sums to the word length and is rotation invariant") {
  std::mt19937 rng(89);
  for (int i = 0; i < 80; ++i) {
    const Word w = testutil::random_positive(rng, 1 + i % 10, 4);
    const NuProfile p = NuProfile::of(w);
    CHECK(p.total() == static_cast<long>(w.size()));

    const Word r = rotated(w, 1 + i % 7);
    const NuProfile pr = NuProfile::of(r);
    CHECK(p.counts == pr.counts);
    CHECK(nu_total(w) == nu_total(r));
  }
}

TEST_CASE("nu on the 3-PARTITION words") {
  for (const auto& shipped : shipped_3p_instances()) {
    const CbiInstance enc = encode_3p(shipped.instance);
    const long n = shipped.instance.n;
    const long N = shipped.instance.target;
    CHECK(nu_total(enc.v) == 13 * n - n * N);
    CHECK(nu_total(enc.w) == -5 * n - n * N);
    CHECK(nu_total(enc.v) - nu_total(enc.w) == 18 * n);
  }
}

TEST_CASE("exhaustive delta check matches the lemma") {
  const NuDeltaReport r = exhaustive_delta_check();
  CHECK(r.max_delta == 6);
  CHECK(r.delta_six_cc_cuts == 0);
  CHECK(r.cases_checked == 65536 + 4096);
}

TEST_CASE("a broken nu table is caught by the sweep") {
  // Same sweep with the aa term double-counted: the bound 6 must fail,
  // showing the checker can detect violations.
  auto broken_nu = [](std::span<const char> s) {
    return detail::nu_total_span(s) + detail::nu_xy_span('a', 'a', s);
  };
  static constexpr std::array<char, 4> alpha{'a', 'b', 'c', 'd'};
  int max_delta = 0;
  for (int bits = 0; bits < 65536; ++bits) {
    int v = bits;
    std::array<char, 8> x{};
    for (int i = 0; i < 8; ++i) {
      x[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(v & 3)];
      v >>= 2;
    }
    const std::array<char, 8> y{x[0], x[1], x[6], x[7], x[4], x[5], x[2], x[3]};
    max_delta = std::max(max_delta, broken_nu(std::span<const char>(x.data(), 8)) -
                                        broken_nu(std::span<const char>(y.data(), 8)));
  }
  CHECK(max_delta > 6);
}

TEST_CASE("every single interchange moves nu by at most six") {
  std::mt19937 rng(97);
  for (int i = 0; i < 150; ++i) {
    const Word v = testutil::random_positive(rng, 2 + i % 9, 4);
    const Word moved = apply_interchange(v, random_move(rng, v.size()));
    const int delta = nu_total(v) - nu_total(moved);
    CHECK(delta <= 6);
    CHECK(delta >= -6);
  }
}

TEST_CASE("nu lower bound") {
  for (const auto& shipped : shipped_3p_instances()) {
    const CbiInstance enc = encode_3p(shipped.instance);
    CHECK(nu_lower_bound(enc.v, enc.w) == 3L * shipped.instance.n);
  }

  const Word v = W("abcdabcd");
  CHECK(nu_lower_bound(v, rotated(v, 3)) == 0);
  CHECK(nu_lower_bound(W("ababab"), W("aaabbb")) <= 1);
  CHECK_THROWS_AS(nu_lower_bound(W("ab"), W("aab")), not_related_error);
  CHECK_THROWS_AS(nu_lower_bound(W("xy"), W("yx")), domain_error);
}

TEST_CASE("the bound never exceeds the true distance on small words") {
  std::mt19937 rng(101);
  for (int i = 0; i < 60; ++i) {
    auto [v, w] = testutil::random_related_pair(rng, 2 + i % 5, 4);
    CHECK(nu_lower_bound(v, w) <= static_cast<long>(oracle_bfs(v, w).value()));
  }
  for (int i = 0; i < 25; ++i) {
    auto [v, w] = testutil::random_related_pair(rng, 6 + i % 2, 4);
    CHECK(nu_lower_bound(v, w) <= static_cast<long>(oracle_bfs(v, w).value()));
  }
}
