#pragma once

// Fixed-target orbit membership: a linear-time blocker scanner raced against
// Whitehead minimization of the query.

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "fgkit/blockers.hpp"
#include "fgkit/whitehead_algorithm.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

enum class BlockerMode { blocking, slender };
enum class Strategy { race, scan, full, count };
enum class Route { scanner_reject, counting_reject, full_algorithm };

std::string to_string(Strategy s);
std::string to_string(Route r);
Strategy parse_strategy(std::string_view text);
BlockerMode parse_mode(std::string_view text);

/// Everything that depends only on the fixed word u.
struct FixedTarget {
  int rank = 2;
  Word original;
  CyclicWord minimized;
  BlockerSpec blocker;
  Word pb_unit;
  std::size_t occurrence_bound = 0;
  std::shared_ptr<const CyclicWordSet> orbit;
};

/// Minimizes u, builds its blocker and caches the equal-length orbit of the
/// minimized word. Throws for trivial u, and for slender mode at rank 2.
FixedTarget precompute(const Word& u, int rank, BlockerMode mode = BlockerMode::blocking,
                       std::size_t orbit_cap = kDefaultOrbitCap);

struct Decision {
  bool answer = false;
  Route route = Route::full_algorithm;
  std::size_t letters_examined = 0;
  std::chrono::nanoseconds elapsed{0};
  bool input_cyclically_reduced = true;
};

/// Knuth-Morris-Pratt automaton fed one letter at a time.
class StreamMatcher {
 public:
  explicit StreamMatcher(std::span<const Letter> pattern);
  /// Returns true when the letters fed so far end with the pattern.
  bool feed(Letter l);
  void reset() { state_ = 0; }
  std::size_t pattern_size() const { return pattern_.size(); }

 private:
  std::vector<Letter> pattern_;
  std::vector<std::size_t> fail_;
  std::size_t state_ = 0;
};

/// Incremental search for `pattern` in the cyclic word `v`, reading the
/// stream v v up to |v| + |pattern| - 1 letters. A pattern longer than v
/// never occurs; the stream then stops after |v| letters.
class BlockerScanner {
 public:
  BlockerScanner(std::span<const Letter> v, const Word& pattern);
  /// Reads up to `budget` more letters. Returns the 1-based stream position
  /// at which the first occurrence ends, once found.
  std::optional<std::size_t> advance(std::size_t budget);
  bool exhausted() const { return pos_ >= limit_; }
  std::size_t consumed() const { return pos_; }
  std::size_t limit() const { return limit_; }

 private:
  std::span<const Letter> v_;
  StreamMatcher matcher_;
  std::size_t pos_ = 0;
  std::size_t limit_;
  std::optional<std::size_t> hit_;
};

/// Counts pairwise disjoint occurrences of `unit` greedily along the cyclic
/// stream of `v`. Occurrences crossing the end of v count only if they stop
/// before the first counted occurrence starts.
class CountingScanner {
 public:
  CountingScanner(std::span<const Letter> v, const Word& unit, std::size_t bound);
  std::optional<std::size_t> advance(std::size_t budget);
  bool exhausted() const { return pos_ >= limit_; }
  std::size_t consumed() const { return pos_; }
  std::size_t count() const { return count_; }

 private:
  std::span<const Letter> v_;
  StreamMatcher matcher_;
  std::size_t bound_;
  std::size_t pos_ = 0;
  std::size_t limit_;
  std::size_t count_ = 0;
  std::optional<std::size_t> first_start_;
  std::optional<std::size_t> hit_;
};

/// First end position of `blocker` in the cyclic stream of v, or none.
std::optional<std::size_t> scan_for_blocker(const Word& v, const Word& blocker);
/// Earliest stream position at which bound + 1 disjoint occurrences of
/// `pb_unit` have been counted, or none.
std::optional<std::size_t> count_scan(const Word& v, const Word& pb_unit, std::size_t bound);

inline constexpr std::size_t kDefaultScanBudget = 64;

/// Whether v lies in the orbit of the target word. The answer never depends
/// on the strategy; the route and cost do.
Decision decide(const FixedTarget& t, const Word& v, Strategy strategy = Strategy::race,
                std::size_t scan_budget = kDefaultScanBudget);

struct BenchRow {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_letters = 0;
  std::size_t p95_letters = 0;
  double mean_ns = 0;
  double reject_fraction = 0;
  std::vector<std::size_t> letters;  // per sample, in sample order
};

/// Runs decide on uniform random cyclically reduced words of each length.
/// Sample i of length n draws from its own generator seeded by (seed, n, i).
std::vector<BenchRow> bench_average_case(const FixedTarget& t, const std::vector<std::size_t>& lengths,
                                         std::size_t samples, std::uint64_t seed,
                                         Strategy strategy = Strategy::race,
                                         std::size_t scan_budget = kDefaultScanBudget);

/// Header plus one line per row: n,samples,mean_letters,p95_letters,mean_ns,reject_fraction
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace fgkit
