#include <doctest.h>

#include <sstream>

#include "fgkit/hybrid.hpp"
#include "test_support.hpp"

using namespace fgkit;
using fgkit::testing::W;

TEST_CASE("precomputation") {
  auto t = precompute(W("ab"), 2);
  CHECK(t.minimized.size() == 1);
  CHECK(t.occurrence_bound == 1);
  CHECK(t.blocker.product == W("aabbaaabba"));
  CHECK(t.orbit->size() == 4);

  t = precompute(W("ABab"), 2);
  CHECK(t.minimized.size() == 4);
  CHECK(t.blocker.product.size() == 25);

  t = precompute(W("aabbcc"), 3, BlockerMode::slender);
  CHECK(t.blocker.product.size() == 18);
  CHECK(t.pb_unit == W("Abccba"));

  CHECK_THROWS_AS(precompute(W("abA"), 2, BlockerMode::slender), std::invalid_argument);
  CHECK_THROWS_AS(precompute(W("aA"), 2), std::invalid_argument);
}

TEST_CASE("names") {
  for (Strategy s : {Strategy::race, Strategy::scan, Strategy::full, Strategy::count}) {
    CHECK(parse_strategy(to_string(s)) == s);
  }
  CHECK(parse_strategy("full-only") == Strategy::full);
  CHECK(to_string(Route::scanner_reject) == "scanner-reject");
  CHECK(parse_mode("slender") == BlockerMode::slender);
  CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);
}

TEST_CASE("blocker scanning") {
  const Word blocker = W("aabbaaabba");
  CHECK(scan_for_blocker(W("aabbaaabbabab"), blocker) == std::optional<std::size_t>(10));
  CHECK_FALSE(scan_for_blocker(W("abababababababab"), blocker));
  // An occurrence wrapping around the end of the cyclic word.
  CHECK(scan_for_blocker(W("aabbabab") * W("aabba"), W("aabbaaabba")).has_value());
  CHECK_FALSE(scan_for_blocker(W("aabba"), blocker));

  Rng rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word v = random_cyclically_reduced(1 + trial % 14, 2, rng);
    const Word p = random_reduced(1 + trial % 4, 2, rng);
    const bool expected = p.size() <= v.size() && is_subword_cyclic(p, CyclicWord(v));
    CHECK(scan_for_blocker(v, p).has_value() == expected);

    BlockerScanner one(v.letters(), p);
    std::optional<std::size_t> hit;
    while (!one.exhausted() && !hit) hit = one.advance(1);
    CHECK(hit == scan_for_blocker(v, p));
    CHECK(one.consumed() <= one.limit());
  }
}

TEST_CASE("occurrence counting") {
  const Word unit = W("aabba");
  const Word v = unit * unit * unit * W("bab");
  CHECK(count_scan(v, unit, 2) == std::optional<std::size_t>(15));
  CHECK(count_scan(v, unit, 0) == std::optional<std::size_t>(5));
  CHECK_FALSE(count_scan(v, unit, 3));

  // Greedy counting never overstates the maximal disjoint packing.
  Rng rng(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word host = random_cyclically_reduced(1 + trial % 16, 2, rng);
    const Word pat = random_reduced(1 + trial % 3, 2, rng);
    const std::size_t best = count_disjoint_occurrences_cyclic(pat, host.letters());
    for (std::size_t bound = 0; bound <= 3; ++bound) {
      if (count_scan(host, pat, bound)) CHECK(best >= bound + 1);
    }
  }
}

TEST_CASE("decisions on fixed inputs") {
  const auto t = precompute(W("ab"), 2);
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    Word v;
    while (v.size() < 40) v = random_automorphism(2, 20, rng).apply(W("ab"));
    const Decision d = decide(t, v);
    CHECK(d.answer);
    CHECK(d.route == Route::full_algorithm);
  }

  const Decision rej = decide(t, W("bab") * t.blocker.product * W("bab"));
  CHECK_FALSE(rej.answer);
  CHECK(rej.route == Route::scanner_reject);
  CHECK_FALSE(same_orbit(W("ab"), W("bab") * t.blocker.product * W("bab"), 2));

  const auto ta = precompute(W("a"), 2);
  const Decision b = decide(ta, W("b"));
  CHECK(b.answer);
  CHECK(b.route == Route::full_algorithm);

  const Decision conj = decide(ta, W("abA"));
  CHECK(conj.answer);
  CHECK_FALSE(conj.input_cyclically_reduced);

  CHECK_FALSE(decide(ta, W("")).answer);
  CHECK_THROWS_AS(decide(ta, W("c")), std::invalid_argument);
  CHECK_THROWS_AS(decide(ta, W("a"), Strategy::race, 0), std::invalid_argument);
}

TEST_CASE("every strategy gives the same answer, and rejects are sound") {
  Rng rng(33);
  const std::vector<FixedTarget> targets{precompute(W("ab"), 2), precompute(W("ABab"), 2),
                                         precompute(W("aab"), 2), precompute(W("ab"), 3),
                                         precompute(W("abc"), 3, BlockerMode::slender)};
  for (int trial = 0; trial < 600; ++trial) {
    const FixedTarget& t = targets[trial % targets.size()];
    Word v;
    if (trial % 3 == 0) {
      v = random_automorphism(t.rank, 1 + trial % 9, rng).apply(t.original);
    } else {
      v = random_cyclically_reduced(1 + trial % 40, t.rank, rng);
    }
    const Decision full = decide(t, v, Strategy::full);
    CHECK(full.answer == same_orbit(t.original, v, t.rank));
    for (Strategy s : {Strategy::race, Strategy::scan, Strategy::count}) {
      const Decision d = decide(t, v, s);
      CHECK(d.answer == full.answer);
      if (d.route != Route::full_algorithm) CHECK_FALSE(d.answer);
    }
    CHECK(decide(t, v, Strategy::race, 1).answer == full.answer);
  }
}

TEST_CASE("decisions are deterministic") {
  const auto t = precompute(W("ab"), 2);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Word v = random_cyclically_reduced(300, 2, seed);
    const Decision a = decide(t, v);
    const Decision b = decide(t, v);
    CHECK(a.answer == b.answer);
    CHECK(a.route == b.route);
    CHECK(a.letters_examined == b.letters_examined);
  }
}

TEST_CASE("benchmark rows") {
  const auto t = precompute(W("ab"), 2);
  const auto rows = bench_average_case(t, {64, 256}, 40, 7);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 64);
  CHECK(rows[0].letters.size() == 40);
  CHECK(rows[0].p95_letters >= *std::min_element(rows[0].letters.begin(), rows[0].letters.end()));
  CHECK(rows[1].reject_fraction == 1.0);

  const auto again = bench_average_case(t, {64, 256}, 40, 7);
  CHECK(again[0].letters == rows[0].letters);
  CHECK(again[1].letters == rows[1].letters);

  std::ostringstream os;
  write_bench_csv(rows, os);
  CHECK(os.str().rfind("n,samples,mean_letters,p95_letters,mean_ns,reject_fraction\n64,40,", 0) == 0);
  CHECK_THROWS_AS(bench_average_case(t, {64}, 0, 1), std::invalid_argument);
}
