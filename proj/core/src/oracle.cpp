#include "fgkit/oracle.hpp"

#include <algorithm>
#include <deque>

namespace fgkit {

namespace {

std::vector<EndoMap> nontrivial_elementary_maps(int rank) {
  std::vector<EndoMap> maps;
  for (const auto& t : enumerate_whitehead_auts(rank)) {
    if (const auto* m = std::get_if<MultiplierAut>(&t); m && is_cyclically_trivial(*m, rank)) continue;
    maps.push_back(to_endo(t, rank));
  }
  return maps;
}

std::size_t cyclic_length(const std::vector<Letter>& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return hi - lo;
}

std::string letters_key(std::span<const Letter> letters) {
  std::string k;
  k.reserve(letters.size());
  for (Letter l : letters) k.push_back(static_cast<char>(l.signed_value()));
  return k;
}

}  // namespace

std::vector<CyclicWord> OrbitBall::sorted() const {
  std::vector<CyclicWord> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitBall orbit_ball(const Word& w, int rank, std::size_t radius, std::size_t cap) {
  check_rank(rank);
  check_word_rank(w, rank);
  OrbitBall ball;
  ball.seed = CyclicWord(w);
  ball.rank = rank;
  ball.radius = radius;
  if (ball.seed.size() > radius) {
    throw std::invalid_argument("orbit_ball: seed is longer than the radius");
  }
  ball.members.insert(ball.seed);
  const auto maps = nontrivial_elementary_maps(rank);
  std::deque<CyclicWord> frontier{ball.seed};
  std::vector<Letter> buffer;
  std::vector<Letter> canonical;
  while (!frontier.empty()) {
    const CyclicWord z = std::move(frontier.front());
    frontier.pop_front();
    for (const EndoMap& m : maps) {
      m.apply_into(z.letters(), buffer);
      if (cyclic_length(buffer) > radius) {
        ++ball.pruned;
        continue;
      }
      canonical_cyclic_form(buffer, canonical);
      if (ball.members.contains(std::span<const Letter>(canonical))) continue;
      CyclicWord img{std::span<const Letter>(canonical)};
      ball.members.insert(img);
      if (ball.members.size() > cap) {
        throw CapExceeded("orbit ball exceeds cap of " + std::to_string(cap) + " members");
      }
      frontier.push_back(std::move(img));
    }
  }
  ball.frontier_exhausted = true;
  return ball;
}

std::vector<CyclicWord> primitives_up_to(int rank, std::size_t radius, std::size_t cap) {
  if (radius == 0) return {};
  return orbit_ball(Word::generator(1), rank, radius, cap).sorted();
}

std::optional<CyclicWord> refute_pb(const Word& u, int rank, std::size_t radius) {
  check_word_rank(u, rank);
  for (const CyclicWord& p : primitives_up_to(rank, radius)) {
    if (is_subword_cyclic(u, p)) return p;
  }
  return std::nullopt;
}

PbRefuter::PbRefuter(int rank, std::size_t radius, std::size_t max_query)
    : rank_(rank), max_query_(max_query), primitives_(primitives_up_to(rank, radius)) {
  for (std::size_t i = 0; i < primitives_.size(); ++i) {
    const auto letters = primitives_[i].letters();
    const std::size_t n = letters.size();
    std::vector<Letter> doubled(letters.begin(), letters.end());
    doubled.insert(doubled.end(), letters.begin(), letters.end());
    for (std::size_t start = 0; start < n; ++start) {
      for (std::size_t len = 1; len <= std::min(n, max_query); ++len) {
        index_.try_emplace(letters_key(std::span(doubled).subspan(start, len)), i);
      }
    }
  }
}

std::optional<CyclicWord> PbRefuter::witness(const Word& u) const {
  check_word_rank(u, rank_);
  if (u.size() <= max_query_) {
    const auto it = index_.find(letters_key(u.letters()));
    if (it == index_.end()) return std::nullopt;
    return primitives_[it->second];
  }
  for (const CyclicWord& p : primitives_) {
    if (is_subword_cyclic(u, p)) return p;
  }
  return std::nullopt;
}

BlockingReport verify_orbit_blocking(const OrbitBall& ball, const Word& blocker) {
  BlockingReport r;
  r.ball_size = ball.members.size();
  r.pruned = ball.pruned;
  for (const CyclicWord& z : ball.sorted()) {
    if (is_subword_cyclic(blocker, z)) {
      r.passed = false;
      r.counterexample = z;
      break;
    }
  }
  return r;
}

BlockingReport verify_orbit_blocking(const Word& w, const Word& blocker, int rank, std::size_t radius) {
  return verify_orbit_blocking(orbit_ball(w, rank, radius), blocker);
}

CountingReport max_disjoint_occurrences(const OrbitBall& ball, const Word& unit) {
  CountingReport r;
  r.ball_size = ball.members.size();
  r.pruned = ball.pruned;
  for (const CyclicWord& z : ball.sorted()) {
    const std::size_t c = count_disjoint_occurrences_cyclic(unit, z);
    if (!r.argmax || c > r.max_count) {
      r.max_count = c;
      r.argmax = z;
    }
  }
  return r;
}

}  // namespace fgkit
