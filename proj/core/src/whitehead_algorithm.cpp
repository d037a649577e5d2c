#include "fgkit/whitehead_algorithm.hpp"

#include <deque>

namespace fgkit {

namespace {

std::vector<Letter> cyclic_core_letters(const Word& w) {
  const Word core = cyclic_reduce(w).core;
  return {core.begin(), core.end()};
}

}  // namespace

MinimizationStepper::MinimizationStepper(const Word& w, int rank) : rank_(rank) {
  check_rank(rank);
  check_word_rank(w, rank);
  for (const auto& t : enumerate_multiplier_auts(rank)) {
    if (is_cyclically_trivial(t, rank)) continue;
    auts_.push_back(t);
    maps_.push_back(to_endo(t, rank));
  }
  current_ = cyclic_core_letters(w);
  done_ = current_.size() <= 1;
}

bool MinimizationStepper::step() {
  if (done_) return false;
  ++attempts_;
  const Word image = maps_[next_].apply(current_);
  const CyclicReduction red = cyclic_reduce(image);
  if (red.core.size() < current_.size()) {
    current_.assign(red.core.begin(), red.core.end());
    ++steps_;
    next_ = 0;
    if (current_.size() <= 1) done_ = true;
    return !done_;
  }
  if (++next_ == auts_.size()) done_ = true;
  return !done_;
}

MinimizationResult minimize(const Word& w, int rank) {
  check_rank(rank);
  check_word_rank(w, rank);
  const auto auts = enumerate_multiplier_auts(rank);
  std::vector<MultiplierAut> useful;
  std::vector<EndoMap> maps;
  for (const auto& t : auts) {
    if (is_cyclically_trivial(t, rank)) continue;
    useful.push_back(t);
    maps.push_back(to_endo(t, rank));
  }
  MinimizationResult result;
  Word current = cyclic_reduce(w).core;
  bool improved = current.size() > 1;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      Word next = cyclic_reduce(maps[i].apply(current)).core;
      if (next.size() < current.size()) {
        current = std::move(next);
        result.applied.push_back(useful[i]);
        ++result.steps;
        improved = current.size() > 1;
        break;
      }
    }
  }
  result.minimal = CyclicWord(current);
  return result;
}

CyclicWord apply_cyclic(const EndoMap& m, const CyclicWord& w) {
  thread_local std::vector<Letter> buffer;
  m.apply_into(w.letters(), buffer);
  return CyclicWord(std::span<const Letter>(buffer));
}

bool is_primitive(const Word& w, int rank) { return minimize(w, rank).minimal.size() == 1; }

CyclicWordSet equal_length_orbit(const CyclicWord& minimal, int rank,
                                                  std::size_t cap) {
  check_rank(rank);
  check_word_rank(minimal.word(), rank);
  std::vector<EndoMap> maps;
  for (const auto& t : enumerate_whitehead_auts(rank)) {
    if (const auto* m = std::get_if<MultiplierAut>(&t); m && is_cyclically_trivial(*m, rank)) continue;
    maps.push_back(to_endo(t, rank));
  }
  CyclicWordSet seen{minimal};
  std::deque<CyclicWord> frontier{minimal};
  while (!frontier.empty()) {
    const CyclicWord w = std::move(frontier.front());
    frontier.pop_front();
    for (const EndoMap& m : maps) {
      CyclicWord img = apply_cyclic(m, w);
      if (img.size() != minimal.size()) continue;
      if (seen.insert(img).second) {
        if (seen.size() > cap) {
          throw CapExceeded("equal-length orbit exceeds cap of " + std::to_string(cap));
        }
        frontier.push_back(std::move(img));
      }
    }
  }
  return seen;
}

bool same_orbit(const Word& u, const Word& v, int rank, std::size_t cap) {
  const CyclicWord mu = minimize(u, rank).minimal;
  const CyclicWord mv = minimize(v, rank).minimal;
  if (mu.size() != mv.size()) return false;
  if (mu == mv) return true;
  return equal_length_orbit(mu, rank, cap).contains(mv);
}

}  // namespace fgkit
