#pragma once

// Brute-force ground truth for small lengths: bounded orbit balls, bounded
// primitive enumeration and bounded refutation of primitivity-blocking.
// Negative answers only hold up to the given radius.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fgkit/whitehead_algorithm.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

inline constexpr std::size_t kDefaultBallCap = 5'000'000;

struct OrbitBall {
  CyclicWord seed;
  int rank = 2;
  std::size_t radius = 0;
  CyclicWordSet members;
  /// Images discarded for exceeding the radius.
  std::size_t pruned = 0;
  bool frontier_exhausted = false;

  /// Members in canonical order (length, then letters).
  std::vector<CyclicWord> sorted() const;
};

/// Breadth-first closure of the cyclic reduction of w under every elementary
/// Whitehead automorphism, keeping images of cyclic length <= L.
/// Throws CapExceeded when the member count passes `cap`.
OrbitBall orbit_ball(const Word& w, int rank, std::size_t radius, std::size_t cap = kDefaultBallCap);

/// Cyclically reduced primitives of length <= L, as canonical cyclic words in
/// canonical order.
std::vector<CyclicWord> primitives_up_to(int rank, std::size_t radius, std::size_t cap = kDefaultBallCap);

/// A cyclically reduced primitive of length <= L whose cyclic word contains
/// u; the shortest such in canonical order. None means blocking up to L.
std::optional<CyclicWord> refute_pb(const Word& u, int rank, std::size_t radius);

/// Batch form of refute_pb: enumerates the primitives once and indexes every
/// cyclic subword up to `max_query` letters.
class PbRefuter {
 public:
  PbRefuter(int rank, std::size_t radius, std::size_t max_query);

  std::optional<CyclicWord> witness(const Word& u) const;
  std::size_t primitive_count() const { return primitives_.size(); }
  const std::vector<CyclicWord>& primitives() const { return primitives_; }

 private:
  int rank_;
  std::size_t max_query_;
  std::vector<CyclicWord> primitives_;
  std::unordered_map<std::string, std::size_t> index_;  // subword -> primitive
};

struct BlockingReport {
  bool passed = true;
  std::size_t ball_size = 0;
  std::size_t pruned = 0;
  std::optional<CyclicWord> counterexample;
};

/// Checks that `blocker` is a cyclic subword of no member of the ball.
BlockingReport verify_orbit_blocking(const OrbitBall& ball, const Word& blocker);
BlockingReport verify_orbit_blocking(const Word& w, const Word& blocker, int rank, std::size_t radius);

struct CountingReport {
  std::size_t max_count = 0;
  std::optional<CyclicWord> argmax;
  std::size_t ball_size = 0;
  std::size_t pruned = 0;
};

/// Largest number of disjoint cyclic occurrences of `unit` over the ball.
CountingReport max_disjoint_occurrences(const OrbitBall& ball, const Word& unit);

}  // namespace fgkit
