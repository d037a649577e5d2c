#include "fgkit/blockers.hpp"

#include <algorithm>
#include <set>

#include "fgkit/whitehead_algorithm.hpp"

namespace fgkit {

namespace {

Letter gen(int i) { return Letter(i, false); }
Letter inv(int i) { return Letter(i, true); }

// x1^s1 x2 ... x_{r-1} x_r^2 x_{r-1} ... x2 x1^s2
Word palindromic_pb(int rank, bool first_inverted, bool last_inverted) {
  std::vector<Letter> raw{Letter(1, first_inverted)};
  for (int i = 2; i < rank; ++i) raw.push_back(gen(i));
  raw.push_back(gen(rank));
  raw.push_back(gen(rank));
  for (int i = rank - 1; i >= 2; --i) raw.push_back(gen(i));
  raw.push_back(Letter(1, last_inverted));
  return Word(raw);
}

Word swap_first_two(const Word& w) {
  std::vector<Letter> raw;
  for (Letter l : w) {
    const int g = l.generator() == 1 ? 2 : (l.generator() == 2 ? 1 : l.generator());
    raw.emplace_back(g, l.inverted());
  }
  return Word(raw);
}

Word product_of(const std::vector<Word>& seq) {
  Word p;
  for (const Word& v : seq) p = p * v;
  return p;
}

void check_noncancelling(const std::vector<Word>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Word& cur = seq[i];
    const Word& nxt = seq[(i + 1) % seq.size()];
    if (cur.back() == nxt.front().inverse()) {
      throw std::logic_error("blocking sequence cancels between positions " + std::to_string(i) +
                             " and " + std::to_string((i + 1) % seq.size()));
    }
  }
}

}  // namespace

Word shortest_pb_word(int rank) {
  check_rank(rank);
  if (rank == 2) return Word{inv(1), gen(2), gen(1)};
  return palindromic_pb(rank, false, true);
}

Word pb_word_square_form(int rank) {
  check_rank(rank);
  std::vector<Letter> raw;
  for (int i = 1; i <= rank; ++i) {
    raw.push_back(gen(i));
    raw.push_back(gen(i));
  }
  raw.push_back(gen(1));
  return Word(raw);
}

std::pair<Word, Word> alternating_pb_pair(int rank) {
  check_rank(rank);
  if (rank < 3) throw std::invalid_argument("alternating blocking pair needs rank >= 3");
  return {palindromic_pb(rank, false, true), palindromic_pb(rank, true, false)};
}

std::vector<Word> noncancelling_pb_sequence(int rank, std::size_t count) {
  check_rank(rank);
  std::vector<Word> seq;
  if (rank == 2 || count == 1) {
    seq.assign(count, pb_word_square_form(rank));
  } else {
    const auto [even, odd] = alternating_pb_pair(rank);
    for (std::size_t i = 1; i <= count; ++i) seq.push_back(i % 2 == 1 ? odd : even);
    if (count % 2 == 1) seq.back() = swap_first_two(even);
  }
  if (!seq.empty()) check_noncancelling(seq);
  return seq;
}

Word pb_unit(int rank) {
  check_rank(rank);
  return rank == 2 ? pb_word_square_form(2) : alternating_pb_pair(rank).second;
}

namespace {

BlockerSpec make_spec(int rank, std::size_t bound, bool slender) {
  BlockerSpec spec;
  spec.rank = rank;
  spec.bound = bound;
  spec.slender = slender;
  spec.sequence = noncancelling_pb_sequence(rank, bound + 1);
  spec.product = product_of(spec.sequence);
  std::size_t total = 0;
  for (const Word& v : spec.sequence) total += v.size();
  if (total != spec.product.size()) throw std::logic_error("blocker product cancelled");
  return spec;
}

}  // namespace

BlockerSpec orbit_blocker(const Word& w, int rank) {
  check_rank(rank);
  check_word_rank(w, rank);
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) throw std::invalid_argument("orbit_blocker needs a nontrivial word");
  return make_spec(rank, core.size(), false);
}

BlockerSpec orbit_blocker_slender(const Word& w, int rank) {
  check_rank(rank);
  if (rank < 3) throw std::invalid_argument("slender blockers need rank >= 3");
  check_word_rank(w, rank);
  const Word core = cyclic_reduce(w).core;
  if (core.empty()) throw std::invalid_argument("orbit_blocker_slender needs a nontrivial word");
  return make_spec(rank, slender_decompose(core, rank).size(), true);
}

Word encapsulate(const Word& w, const Word& v, std::size_t m) {
  const Word wm = w.power(static_cast<long>(m));
  return wm * v * wm.inverse();
}

std::size_t encapsulation_exponent(const Word& w, const Word& v) {
  if (w.empty() || v.empty()) throw std::invalid_argument("encapsulation needs nontrivial words");
  if (w * v == v * w) {
    throw std::invalid_argument("encapsulation needs words that are not powers of a common element");
  }
  const Letter first = w.front();
  const Letter last = first.inverse();
  const std::size_t cap = v.size() + 2 * w.size() + 4;
  Word u = v;
  for (std::size_t m = 0; m <= cap; ++m) {
    if (!u.empty() && u.front() == first && u.back() == last) return m;
    u = w * u * w.inverse();
  }
  throw std::logic_error("encapsulation exponent exceeded its safety cap");
}

Word split_word_witness(const Word& w_x, const Word& w_y, const std::vector<int>& x_gens,
                        const std::vector<int>& y_gens, int rank) {
  check_rank(rank);
  if (rank < 3) throw std::invalid_argument("split witness needs rank >= 3");
  const std::set<int> xs(x_gens.begin(), x_gens.end());
  const std::set<int> ys(y_gens.begin(), y_gens.end());
  if (xs.empty() || ys.size() < 2) throw std::invalid_argument("split witness needs X nonempty and |Y| >= 2");
  for (int g : xs) {
    if (ys.contains(g)) throw std::invalid_argument("generator sets overlap");
  }
  for (int g = 1; g <= rank; ++g) {
    if (!xs.contains(g) && !ys.contains(g)) throw std::invalid_argument("generator sets do not cover 1..r");
  }
  if (w_x.empty() || w_y.empty()) throw std::invalid_argument("split witness needs nontrivial parts");
  for (Letter l : w_x) {
    if (!xs.contains(l.generator())) throw std::invalid_argument("w_X leaves <X>");
  }
  for (Letter l : w_y) {
    if (!ys.contains(l.generator())) throw std::invalid_argument("w_Y leaves <Y>");
  }
  int y = 0;
  for (int g : ys) {
    if (g != w_y.back().generator()) {
      y = g;
      break;
    }
  }
  const Word v = w_y.inverse() * w_x * w_y * Word{gen(y)};
  if (!v.is_cyclically_reduced() || !is_primitive(v, rank)) {
    throw std::logic_error("split witness is not a cyclically reduced primitive");
  }
  return v;
}

}  // namespace fgkit
