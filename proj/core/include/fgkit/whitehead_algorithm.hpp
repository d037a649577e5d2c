#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fgkit/automorphism.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

/// Thrown when an enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinimizationResult {
  CyclicWord minimal;
  std::vector<MultiplierAut> applied;
  std::size_t steps = 0;
};

/// Greedy Whitehead descent on cyclic length: scan type II auts in
/// enumeration order, apply the first one that strictly shortens, repeat.
MinimizationResult minimize(const Word& w, int rank);

/// Cyclic word obtained by applying `m` to the cyclic word `w`.
CyclicWord apply_cyclic(const EndoMap& m, const CyclicWord& w);

bool is_primitive(const Word& w, int rank);

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/// Closure of a Whitehead-minimal cyclic word under the length-preserving
/// elementary auts (type II plus the type I generating set).
CyclicWordSet equal_length_orbit(const CyclicWord& minimal, int rank,
                                                  std::size_t cap = kDefaultOrbitCap);

/// Whether some automorphism of F_r takes u to a conjugate of v; for
/// elements this is the same as taking u to v.
bool same_orbit(const Word& u, const Word& v, int rank, std::size_t cap = kDefaultOrbitCap);

/// Resumable form of minimize: each step() tries one enumerated aut, so the
/// descent can be interleaved with other work.
class MinimizationStepper {
 public:
  MinimizationStepper(const Word& w, int rank);

  /// Tries the next aut. Returns false once the word is minimal.
  bool step();
  bool done() const { return done_; }
  const std::vector<Letter>& current() const { return current_; }
  std::size_t steps() const { return steps_; }
  std::size_t attempts() const { return attempts_; }

 private:
  int rank_;
  std::vector<MultiplierAut> auts_;
  std::vector<EndoMap> maps_;
  std::vector<Letter> current_;
  std::size_t next_ = 0;
  std::size_t steps_ = 0;
  std::size_t attempts_ = 0;
  bool done_ = false;
};

}  // namespace fgkit
