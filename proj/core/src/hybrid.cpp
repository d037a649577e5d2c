#include "fgkit/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fgkit {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::race: return "race";
    case Strategy::scan: return "scan";
    case Strategy::full: return "full";
    case Strategy::count: return "count";
  }
  return "race";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::scanner_reject: return "scanner-reject";
    case Route::counting_reject: return "counting-reject";
    case Route::full_algorithm: return "full-algorithm";
  }
  return "full-algorithm";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "race") return Strategy::race;
  if (text == "scan" || text == "scanner-only") return Strategy::scan;
  if (text == "full" || text == "full-only") return Strategy::full;
  if (text == "count" || text == "counting") return Strategy::count;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
}

BlockerMode parse_mode(std::string_view text) {
  if (text == "blocking") return BlockerMode::blocking;
  if (text == "slender") return BlockerMode::slender;
  throw std::invalid_argument("unknown blocker mode '" + std::string(text) + "'");
}

FixedTarget precompute(const Word& u, int rank, BlockerMode mode, std::size_t orbit_cap) {
  check_rank(rank);
  check_word_rank(u, rank);
  if (mode == BlockerMode::slender && rank < 3) {
    throw std::invalid_argument("slender mode needs rank >= 3");
  }
  if (cyclic_reduce(u).core.empty()) throw std::invalid_argument("target word is trivial");
  FixedTarget t;
  t.rank = rank;
  t.original = u;
  t.minimized = minimize(u, rank).minimal;
  const Word m = t.minimized.word();
  t.blocker = mode == BlockerMode::slender ? orbit_blocker_slender(m, rank) : orbit_blocker(m, rank);
  t.pb_unit = pb_unit(rank);
  t.occurrence_bound = t.blocker.bound;
  t.orbit = std::make_shared<const CyclicWordSet>(
      equal_length_orbit(t.minimized, rank, orbit_cap));
  return t;
}

StreamMatcher::StreamMatcher(std::span<const Letter> pattern)
    : pattern_(pattern.begin(), pattern.end()), fail_(pattern.size() + 1, 0) {
  if (pattern_.empty()) throw std::invalid_argument("empty search pattern");
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern_.size(); ++i) {
    while (k > 0 && pattern_[i] != pattern_[k]) k = fail_[k];
    if (pattern_[i] == pattern_[k]) ++k;
    fail_[i + 1] = k;
  }
}

bool StreamMatcher::feed(Letter l) {
  while (state_ > 0 && (state_ == pattern_.size() || pattern_[state_] != l)) state_ = fail_[state_];
  if (pattern_[state_] == l) ++state_;
  return state_ == pattern_.size();
}

namespace {

std::size_t stream_limit(std::size_t n, std::size_t m) { return m <= n ? n + m - 1 : n; }

}  // namespace

BlockerScanner::BlockerScanner(std::span<const Letter> v, const Word& pattern)
    : v_(v), matcher_(pattern.letters()), limit_(stream_limit(v.size(), pattern.size())) {}

std::optional<std::size_t> BlockerScanner::advance(std::size_t budget) {
  if (hit_) return hit_;
  const bool can_match = matcher_.pattern_size() <= v_.size();
  for (std::size_t b = 0; b < budget && pos_ < limit_; ++b) {
    const bool match = matcher_.feed(v_[pos_ % v_.size()]);
    ++pos_;
    if (match && can_match) {
      hit_ = pos_;
      return hit_;
    }
  }
  return std::nullopt;
}

CountingScanner::CountingScanner(std::span<const Letter> v, const Word& unit, std::size_t bound)
    : v_(v), matcher_(unit.letters()), bound_(bound), limit_(stream_limit(v.size(), unit.size())) {}

std::optional<std::size_t> CountingScanner::advance(std::size_t budget) {
  if (hit_) return hit_;
  const std::size_t n = v_.size();
  const std::size_t m = matcher_.pattern_size();
  if (m > n) {
    pos_ = limit_;
    return std::nullopt;
  }
  for (std::size_t b = 0; b < budget && pos_ < limit_; ++b) {
    const bool match = matcher_.feed(v_[pos_ % n]);
    ++pos_;
    if (!match) continue;
    const std::size_t start = pos_ - m;
    if (pos_ > n && (!first_start_ || pos_ - n > *first_start_)) continue;
    if (!first_start_) first_start_ = start;
    ++count_;
    matcher_.reset();
    if (count_ == bound_ + 1) {
      hit_ = pos_;
      return hit_;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> scan_for_blocker(const Word& v, const Word& blocker) {
  const Word core = cyclic_reduce(v).core;
  if (core.empty()) return std::nullopt;
  BlockerScanner s(core.letters(), blocker);
  return s.advance(s.limit());
}

std::optional<std::size_t> count_scan(const Word& v, const Word& pb_unit, std::size_t bound) {
  const Word core = cyclic_reduce(v).core;
  if (core.empty()) return std::nullopt;
  CountingScanner s(core.letters(), pb_unit, bound);
  return s.advance(2 * core.size() + pb_unit.size());
}

namespace {

// Whitehead minimization of the query, checked against the cached orbit.
class WhiteheadTrack {
 public:
  WhiteheadTrack(const FixedTarget& t, const Word& core) : t_(t), stepper_(core, t.rank) {}

  std::optional<bool> verdict() const {
    const auto& c = stepper_.current();
    const std::size_t target = t_.minimized.size();
    if (c.size() < target) return false;
    if (c.size() == target) return t_.orbit->contains(CyclicWord(Word(c)));
    if (stepper_.done()) return false;
    return std::nullopt;
  }

  std::optional<bool> advance() {
    if (auto v = verdict()) return v;
    stepper_.step();
    return verdict();
  }

  bool run() {
    for (;;) {
      if (auto v = advance()) return *v;
    }
  }

 private:
  const FixedTarget& t_;
  MinimizationStepper stepper_;
};

}  // namespace

Decision decide(const FixedTarget& t, const Word& v, Strategy strategy, std::size_t scan_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  check_word_rank(v, t.rank);
  if (scan_budget == 0) throw std::invalid_argument("scan budget must be positive");
  Decision d;
  d.input_cyclically_reduced = v.is_cyclically_reduced();
  const Word core = d.input_cyclically_reduced ? v : cyclic_reduce(v).core;
  const auto finish = [&](bool answer, Route route, std::size_t letters) {
    d.answer = answer;
    d.route = route;
    d.letters_examined = letters;
    d.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0);
    return d;
  };

  if (core.empty()) return finish(false, Route::full_algorithm, 0);
  WhiteheadTrack w(t, core);

  switch (strategy) {
    case Strategy::full:
      return finish(w.run(), Route::full_algorithm, core.size());
    case Strategy::scan: {
      BlockerScanner s(core.letters(), t.blocker.product);
      if (s.advance(s.limit())) return finish(false, Route::scanner_reject, s.consumed());
      return finish(w.run(), Route::full_algorithm, s.consumed());
    }
    case Strategy::count: {
      CountingScanner s(core.letters(), t.pb_unit, t.occurrence_bound);
      while (!s.exhausted()) {
        if (s.advance(scan_budget)) return finish(false, Route::counting_reject, s.consumed());
      }
      return finish(w.run(), Route::full_algorithm, s.consumed());
    }
    case Strategy::race: {
      BlockerScanner s(core.letters(), t.blocker.product);
      for (;;) {
        if (!s.exhausted() && s.advance(scan_budget)) {
          return finish(false, Route::scanner_reject, s.consumed());
        }
        if (auto verdict = w.advance()) return finish(*verdict, Route::full_algorithm, s.consumed());
      }
    }
  }
  throw std::logic_error("unhandled strategy");
}

std::vector<BenchRow> bench_average_case(const FixedTarget& t, const std::vector<std::size_t>& lengths,
                                         std::size_t samples, std::uint64_t seed, Strategy strategy,
                                         std::size_t scan_budget) {
  if (samples == 0) throw std::invalid_argument("bench needs at least one sample");
  std::vector<BenchRow> rows;
  for (std::size_t n : lengths) {
    if (n == 0) throw std::invalid_argument("bench lengths must be positive");
    BenchRow row;
    row.n = n;
    row.samples = samples;
    double total_ns = 0;
    std::size_t rejects = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i)};
      Rng rng(seq);
      const Word v = random_cyclically_reduced(n, t.rank, rng);
      const Decision d = decide(t, v, strategy, scan_budget);
      row.letters.push_back(d.letters_examined);
      total_ns += static_cast<double>(d.elapsed.count());
      if (!d.answer) ++rejects;
    }
    row.mean_letters = static_cast<double>(std::accumulate(row.letters.begin(), row.letters.end(), std::size_t{0})) /
                       static_cast<double>(samples);
    std::vector<std::size_t> sorted = row.letters;
    std::sort(sorted.begin(), sorted.end());
    const auto rank95 = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(samples)));
    row.p95_letters = sorted[std::max<std::size_t>(rank95, 1) - 1];
    row.mean_ns = total_ns / static_cast<double>(samples);
    row.reject_fraction = static_cast<double>(rejects) / static_cast<double>(samples);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "n,samples,mean_letters,p95_letters,mean_ns,reject_fraction\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.samples << ',' << r.mean_letters << ',' << r.p95_letters << ',' << r.mean_ns << ','
        << r.reject_fraction << '\n';
  }
}

}  // namespace fgkit
