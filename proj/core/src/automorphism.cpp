#include "fgkit/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fgkit/folding.hpp"

namespace fgkit {

EndoMap::EndoMap(int rank) : rank_(rank) {
  check_rank(rank);
  for (int i = 1; i <= rank; ++i) images_.push_back(Word::generator(i));
  letter_images_.resize(static_cast<std::size_t>(2 * rank));
  for (int i = 1; i <= rank; ++i) {
    letter_images_[static_cast<std::size_t>(Letter(i, false).index())] = images_[i - 1];
    letter_images_[static_cast<std::size_t>(Letter(i, true).index())] = images_[i - 1].inverse();
  }
}

EndoMap::EndoMap(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (images_.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("EndoMap needs exactly one image per generator");
  }
  letter_images_.resize(static_cast<std::size_t>(2 * rank));
  for (int i = 1; i <= rank; ++i) {
    check_word_rank(images_[i - 1], rank);
    letter_images_[static_cast<std::size_t>(Letter(i, false).index())] = images_[i - 1];
    letter_images_[static_cast<std::size_t>(Letter(i, true).index())] = images_[i - 1].inverse();
  }
}

EndoMap EndoMap::parse(std::string_view text, int rank) {
  std::vector<Word> images;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    images.push_back(Word::parse(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return EndoMap(rank, std::move(images));
}

Word EndoMap::apply(std::span<const Letter> letters) const {
  Word out;
  for (Letter l : letters) {
    if (l.generator() > rank_) throw std::invalid_argument("letter beyond the map's rank");
    for (Letter x : image(l)) out.push_back_reduce(x);
  }
  return out;
}

void EndoMap::apply_into(std::span<const Letter> letters, std::vector<Letter>& out) const {
  std::size_t bound = 0;
  for (Letter l : letters) {
    if (l.generator() > rank_) throw std::invalid_argument("letter beyond the map's rank");
    bound += letter_images_[static_cast<std::size_t>(l.index())].size();
  }
  out.resize(bound);
  Letter* o = out.data();
  std::size_t k = 0;
  for (Letter l : letters) {
    for (Letter x : letter_images_[static_cast<std::size_t>(l.index())]) {
      if (k > 0 && o[k - 1].signed_value() == -x.signed_value()) {
        --k;
      } else {
        o[k++] = x;
      }
    }
  }
  out.resize(k);
}

bool EndoMap::is_identity() const {
  for (int i = 1; i <= rank_; ++i) {
    if (images_[i - 1] != Word::generator(i)) return false;
  }
  return true;
}

std::string EndoMap::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s.push_back(';');
    s += images_[i].to_string();
  }
  return s;
}

Word apply(const EndoMap& m, const Word& w) { return m.apply(w); }

EndoMap compose(const EndoMap& m1, const EndoMap& m2) {
  if (m1.rank() != m2.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(m2.images().size());
  for (const Word& w : m2.images()) images.push_back(m1.apply(w));
  return EndoMap(m1.rank(), std::move(images));
}

void validate(const WhiteheadAut& t, int rank) {
  check_rank(rank);
  if (const auto* p = std::get_if<PermutationAut>(&t)) {
    if (p->perm.size() != static_cast<std::size_t>(rank) || p->invert.size() != p->perm.size()) {
      throw std::invalid_argument("permutation aut has wrong arity");
    }
    std::vector<int> sorted = p->perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < rank; ++i) {
      if (sorted[i] != i + 1) throw std::invalid_argument("not a permutation of 1..r");
    }
    return;
  }
  const auto& m = std::get<MultiplierAut>(t);
  if (m.multiplier.generator() > rank) throw std::invalid_argument("multiplier beyond rank");
  if ((m.subset >> (2 * rank)) != 0) throw std::invalid_argument("subset has letters beyond rank");
  if (!m.contains(m.multiplier) || m.contains(m.multiplier.inverse())) {
    throw std::invalid_argument("type II subset must contain the multiplier but not its inverse");
  }
}

EndoMap to_endo(const WhiteheadAut& t, int rank) {
  validate(t, rank);
  std::vector<Word> images;
  if (const auto* p = std::get_if<PermutationAut>(&t)) {
    for (int i = 0; i < rank; ++i) images.push_back(Word{Letter(p->perm[i], p->invert[i])});
    return EndoMap(rank, std::move(images));
  }
  const auto& m = std::get<MultiplierAut>(t);
  const Word a{m.multiplier};
  const Word a_inv{m.multiplier.inverse()};
  for (int i = 1; i <= rank; ++i) {
    const Letter x(i, false);
    Word img{x};
    if (i != m.multiplier.generator()) {
      const bool has_x = m.contains(x);
      const bool has_inv = m.contains(x.inverse());
      if (has_x) img = img * a;
      if (has_inv) img = a_inv * img;
    }
    images.push_back(std::move(img));
  }
  return EndoMap(rank, std::move(images));
}

WhiteheadAut inverse(const WhiteheadAut& t, int rank) {
  validate(t, rank);
  if (const auto* p = std::get_if<PermutationAut>(&t)) {
    PermutationAut inv{std::vector<int>(static_cast<std::size_t>(rank)),
                       std::vector<bool>(static_cast<std::size_t>(rank))};
    for (int i = 0; i < rank; ++i) {
      inv.perm[p->perm[i] - 1] = i + 1;
      inv.invert[p->perm[i] - 1] = p->invert[i];
    }
    return inv;
  }
  const auto& m = std::get<MultiplierAut>(t);
  MultiplierAut inv{m.multiplier.inverse(), m.subset};
  inv.subset &= ~(std::uint64_t{1} << m.multiplier.index());
  inv.subset |= std::uint64_t{1} << m.multiplier.inverse().index();
  return inv;
}

std::string describe(const WhiteheadAut& t) {
  std::ostringstream os;
  if (const auto* p = std::get_if<PermutationAut>(&t)) {
    os << "perm(";
    for (std::size_t i = 0; i < p->perm.size(); ++i) {
      if (i) os << ',';
      os << Letter(p->perm[i], p->invert[i]).to_char();
    }
    os << ')';
    return os.str();
  }
  const auto& m = std::get<MultiplierAut>(t);
  os << "mult(" << m.multiplier.to_char() << ",{";
  bool first = true;
  for (int k = 0; k < 64; ++k) {
    if ((m.subset >> k) & 1U) {
      if (!first) os << ',';
      os << Letter::from_index(k).to_char();
      first = false;
    }
  }
  os << "})";
  return os.str();
}

std::vector<MultiplierAut> enumerate_multiplier_auts(int rank) {
  check_rank(rank);
  if (2 * rank > 64) throw std::invalid_argument("rank too large for subset masks");
  std::vector<MultiplierAut> out;
  const int letters = 2 * rank;
  for (int mi = 0; mi < letters; ++mi) {
    const Letter m = Letter::from_index(mi);
    const int inv = m.inverse().index();
    // Free letters are all except m and m^-1, in index order.
    std::vector<int> free_letters;
    for (int k = 0; k < letters; ++k) {
      if (k != mi && k != inv) free_letters.push_back(k);
    }
    const std::uint64_t combos = std::uint64_t{1} << free_letters.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      std::uint64_t subset = std::uint64_t{1} << mi;
      for (std::size_t b = 0; b < free_letters.size(); ++b) {
        if ((mask >> b) & 1U) subset |= std::uint64_t{1} << free_letters[b];
      }
      out.push_back({m, subset});
    }
  }
  return out;
}

bool is_cyclically_trivial(const MultiplierAut& t, int rank) {
  const std::uint64_t all = (rank * 2 >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (2 * rank)) - 1);
  const std::uint64_t only_m = std::uint64_t{1} << t.multiplier.index();
  const std::uint64_t conj = all & ~(std::uint64_t{1} << t.multiplier.inverse().index());
  return t.subset == only_m || t.subset == conj;
}

std::vector<WhiteheadAut> enumerate_whitehead_auts(int rank) {
  std::vector<WhiteheadAut> out;
  for (const auto& m : enumerate_multiplier_auts(rank)) out.emplace_back(m);
  for (int i = 1; i < rank; ++i) {
    PermutationAut p{std::vector<int>(static_cast<std::size_t>(rank)),
                     std::vector<bool>(static_cast<std::size_t>(rank), false)};
    std::iota(p.perm.begin(), p.perm.end(), 1);
    std::swap(p.perm[i - 1], p.perm[i]);
    out.emplace_back(std::move(p));
  }
  PermutationAut inv{std::vector<int>(static_cast<std::size_t>(rank)),
                     std::vector<bool>(static_cast<std::size_t>(rank), false)};
  std::iota(inv.perm.begin(), inv.perm.end(), 1);
  inv.invert[0] = true;
  out.emplace_back(std::move(inv));
  return out;
}

EndoMap random_automorphism(int rank, int steps, Rng& rng) {
  const auto auts = enumerate_whitehead_auts(rank);
  std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
  EndoMap m(rank);
  for (int s = 0; s < steps; ++s) m = compose(to_endo(auts[pick(rng)], rank), m);
  return m;
}

// ---- bases ---------------------------------------------------------------

bool is_basis(const std::vector<Word>& tuple, int rank) {
  check_rank(rank);
  if (tuple.size() != static_cast<std::size_t>(rank)) {
    throw std::invalid_argument("is_basis: tuple arity must equal the rank");
  }
  std::vector<Word> u = tuple;
  for (const Word& w : u) check_word_rank(w, rank);

  for (;;) {
    if (std::any_of(u.begin(), u.end(), [](const Word& w) { return w.empty(); })) return false;
    bool improved = false;
    for (std::size_t i = 0; i < u.size() && !improved; ++i) {
      for (std::size_t j = 0; j < u.size() && !improved; ++j) {
        if (i == j) continue;
        const Word vj = u[j];
        const Word vj_inv = vj.inverse();
        // Right multiplications first; ties broken lexicographically.
        const Word candidates[4] = {u[i] * vj, u[i] * vj_inv, vj * u[i], vj_inv * u[i]};
        const Word* best = &candidates[0];
        for (const Word& c : candidates) {
          if (c.size() < best->size() || (c.size() == best->size() && c < *best)) best = &c;
        }
        if (best->size() < u[i].size()) {
          u[i] = *best;
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  std::vector<bool> seen(static_cast<std::size_t>(rank) + 1, false);
  bool permutation = true;
  for (const Word& w : u) {
    if (w.size() != 1 || seen[static_cast<std::size_t>(w[0].generator())]) {
      permutation = false;
      break;
    }
    seen[static_cast<std::size_t>(w[0].generator())] = true;
  }
  if (permutation) return true;
  // Pair moves alone can stall on a basis (e.g. a conjugated one). Rank r
  // elements generate F_r iff their folded graph is the rank-r bouquet.
  const StallingsGraph g(u, rank);
  return g.vertex_count() == 1 && g.edge_count() == static_cast<std::size_t>(rank);
}

long conjugation_delta(const std::vector<Word>& basis, Letter p) {
  const Word pw{p};
  const Word pinv{p.inverse()};
  long delta = 0;
  for (const Word& z : basis) {
    delta += static_cast<long>((pinv * z * pw).size()) - static_cast<long>(z.size());
  }
  return delta;
}

bool is_cclr_basis(const std::vector<Word>& basis, int rank) {
  for (int k = 0; k < 2 * rank; ++k) {
    if (conjugation_delta(basis, Letter::from_index(k)) < 0) return false;
  }
  return true;
}

CclrResult make_cclr(const std::vector<Word>& basis, int rank) {
  check_rank(rank);
  CclrResult r{basis, Word{}};
  for (;;) {
    long best = 0;
    int best_letter = -1;
    for (int k = 0; k < 2 * rank; ++k) {
      const long d = conjugation_delta(r.basis, Letter::from_index(k));
      if (d < best) {
        best = d;
        best_letter = k;
      }
    }
    if (best_letter < 0) return r;
    const Letter p = Letter::from_index(best_letter);
    const Word pw{p};
    const Word pinv{p.inverse()};
    for (Word& z : r.basis) z = pinv * z * pw;
    r.conjugator = r.conjugator * pw;
  }
}

bool is_rcr_basis(const std::vector<Word>& basis) {
  if (basis.empty()) return true;
  for (const Word& z : basis) {
    if (z.empty()) return true;
  }
  const Letter p = basis.front().front();
  return !std::all_of(basis.begin(), basis.end(),
                      [&](const Word& z) { return z.front() == p && z.back() == p.inverse(); });
}

std::set<Letter> subgroup_first_letters(const std::vector<Word>& gens, int rank) {
  return StallingsGraph(gens, rank).basepoint_letters();
}

bool is_r1_basis(const std::vector<Word>& basis, int rank) {
  if (!is_basis(basis, rank)) throw std::invalid_argument("is_r1_basis: input is not a basis");
  const std::size_t n = basis.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<Word> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) subset.push_back(basis[i]);
    }
    if (subgroup_first_letters(subset, rank).size() >= 2) return true;
  }
  return false;
}

}  // namespace fgkit
