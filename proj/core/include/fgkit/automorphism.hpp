#pragma once

// Endomorphisms of F_r given by generator images, elementary Whitehead
// automorphisms, and predicates on bases.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fgkit/word.hpp"

namespace fgkit {

/// An endomorphism of F_r, determined by the images of x1..xr.
class EndoMap {
 public:
  /// The identity map.
  explicit EndoMap(int rank);
  EndoMap(int rank, std::vector<Word> images);

  /// Semicolon-separated images, e.g. "ab;b" for a -> ab, b -> b.
  static EndoMap parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const { return images_[static_cast<std::size_t>(generator - 1)]; }
  const Word& image(Letter l) const { return letter_images_[static_cast<std::size_t>(l.index())]; }

  Word apply(const Word& w) const { return apply(w.letters()); }
  Word apply(std::span<const Letter> letters) const;
  /// Writes the freely reduced image into `out`, reusing its storage.
  void apply_into(std::span<const Letter> letters, std::vector<Letter>& out) const;

  bool is_identity() const;
  std::string to_string() const;

  bool operator==(const EndoMap& o) const { return rank_ == o.rank_ && images_ == o.images_; }

 private:
  int rank_;
  std::vector<Word> images_;
  std::vector<Word> letter_images_;  // indexed by Letter::index()
};

Word apply(const EndoMap& m, const Word& w);
/// (m1 o m2)(x) = m1(m2(x)).
EndoMap compose(const EndoMap& m1, const EndoMap& m2);

/// Type I: x_i -> x_{perm[i]}^(+-1), a signed permutation of the basis.
struct PermutationAut {
  std::vector<int> perm;     // perm[i-1] = target generator of x_i
  std::vector<bool> invert;  // invert[i-1]: image is inverted
  bool operator==(const PermutationAut&) const = default;
};

/// Type II: multiplier letter m and a subset S of letters with m in S and
/// m^-1 not in S. Bit k of `subset` is the letter with index k.
struct MultiplierAut {
  Letter multiplier;
  std::uint64_t subset = 0;
  bool contains(Letter l) const { return (subset >> l.index()) & 1U; }
  bool operator==(const MultiplierAut&) const = default;
};

using WhiteheadAut = std::variant<PermutationAut, MultiplierAut>;

/// Throws std::invalid_argument on a malformed aut for this rank.
void validate(const WhiteheadAut& t, int rank);
EndoMap to_endo(const WhiteheadAut& t, int rank);
WhiteheadAut inverse(const WhiteheadAut& t, int rank);
std::string describe(const WhiteheadAut& t);

/// All type II auts, in (multiplier index, subset mask) order, then the type I
/// generating set: adjacent transpositions (x_i x_{i+1}) and the inversion of x1.
std::vector<WhiteheadAut> enumerate_whitehead_auts(int rank);
/// Only the type II part of enumerate_whitehead_auts.
std::vector<MultiplierAut> enumerate_multiplier_auts(int rank);
/// True for type II auts that act on cyclic words as the identity
/// (S = {m}, or S = everything except m^-1, which is conjugation).
bool is_cyclically_trivial(const MultiplierAut& t, int rank);

/// Composition of `steps` uniformly chosen elementary auts.
EndoMap random_automorphism(int rank, int steps, Rng& rng);

// ---- bases ---------------------------------------------------------------

/// Nielsen reduction: shorten elements by u_i -> u_i u_j^+-1 or u_j^+-1 u_i
/// while the total length decreases; a basis reduces to a signed permutation
/// of the standard basis. A tuple that stalls is settled by Stallings folding.
/// Throws if tuple.size() != rank.
bool is_basis(const std::vector<Word>& tuple, int rank);

/// Change in total length when every element z is replaced by p^-1 z p.
long conjugation_delta(const std::vector<Word>& basis, Letter p);

/// No single letter conjugation strictly shortens the basis.
bool is_cclr_basis(const std::vector<Word>& basis, int rank);

struct CclrResult {
  std::vector<Word> basis;  // g^-1 * basis[i] * g
  Word conjugator;          // g
};

/// Greedy letter-by-letter conjugation down to a CCLR basis.
CclrResult make_cclr(const std::vector<Word>& basis, int rank);

/// No letter p such that every element begins with p and ends with p^-1.
bool is_rcr_basis(const std::vector<Word>& basis);

/// Some proper subset X has nontrivial elements of <X> with different first
/// letters. Throws if `basis` is not a basis.
bool is_r1_basis(const std::vector<Word>& basis, int rank);

/// First letters of nontrivial elements of the subgroup generated by `gens`.
std::set<Letter> subgroup_first_letters(const std::vector<Word>& gens, int rank);

}  // namespace fgkit
