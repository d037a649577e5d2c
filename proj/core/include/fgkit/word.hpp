#pragma once

// Letters, freely reduced words and cyclic words over a free basis x1..xr.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fgkit {

/// A generator x_i or its inverse. Stored as +i / -i.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, bool inverted) : value_(inverted ? -generator : generator) {}

  static constexpr Letter from_signed(int value) {
    Letter l;
    l.value_ = value;
    return l;
  }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool inverted() const { return value_ < 0; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr int signed_value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }

  /// Vertex index in 0..2r-1: x_i -> 2(i-1), x_i^-1 -> 2(i-1)+1.
  constexpr int index() const { return 2 * (generator() - 1) + (inverted() ? 1 : 0); }
  static constexpr Letter from_index(int index) { return Letter(index / 2 + 1, index % 2 == 1); }

  constexpr bool operator==(const Letter&) const = default;
  // Generator index first, then x_i before x_i^-1.
  constexpr bool operator<(const Letter& o) const { return index() < o.index(); }

  char to_char() const;

 private:
  int value_ = 1;
};

class Word;
class CyclicWord;

/// Result of multiplying two reduced words.
struct ConcatResult;

/// A freely reduced word. The invariant is established by every constructor.
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letter sequence.
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

  /// Parses "aBBa" (lowercase = generator, uppercase = inverse) with optional
  /// exponent sugar "a^3B^2". Reduces the result. "1" and "" are the identity.
  static Word parse(std::string_view text);

  static Word generator(int i) { return Word{Letter(i, false)}; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;
  Word power(long n) const;
  /// Contiguous slice [pos, pos+len); a subword of a reduced word is reduced.
  Word subword(std::size_t pos, std::size_t len) const;

  /// Largest generator index occurring (0 for the empty word).
  int max_generator() const;
  bool is_cyclically_reduced() const;

  std::string to_string() const;

  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const;

  /// Appends one letter, cancelling against the last letter if needed.
  /// Returns true if a cancellation happened.
  bool push_back_reduce(Letter l);

 private:
  std::vector<Letter> letters_;
};

struct ConcatResult {
  Word word;
  std::size_t cancelled_pairs = 0;
};

Word free_reduce(std::span<const Letter> raw);
ConcatResult concat(const Word& u, const Word& v);
Word operator*(const Word& u, const Word& v);

struct CyclicReduction {
  Word core;
  Word conjugator;  // input = conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

/// Index of the lexicographically least rotation of `letters`.
std::size_t least_rotation(std::span<const Letter> letters);

/// A cyclically reduced word up to rotation, stored in its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Cyclically reduces `w` and rotates to canonical form.
  explicit CyclicWord(const Word& w) : CyclicWord(w.letters()) {}
  /// Same for a freely reduced letter sequence.
  explicit CyclicWord(std::span<const Letter> reduced);

  static CyclicWord parse(std::string_view text) { return CyclicWord(Word::parse(text)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i % letters_.size()]; }
  std::span<const Letter> letters() const { return letters_; }
  /// The canonical rotation as a linear (cyclically reduced) word.
  Word word() const { return Word(letters_); }

  /// Compact byte key, one byte per letter. Injective for r <= 127.
  std::string key() const;
  std::size_t hash() const noexcept;
  std::string to_string() const { return word().to_string(); }

  bool operator==(const CyclicWord&) const = default;
  bool operator<(const CyclicWord& o) const;

 private:
  std::vector<Letter> letters_;
};

/// Hash of a letter sequence; CyclicWord::hash() hashes its canonical letters.
std::size_t hash_letters(std::span<const Letter> letters) noexcept;

/// Writes the canonical cyclic form of a freely reduced word into `out`.
void canonical_cyclic_form(std::span<const Letter> reduced, std::vector<Letter>& out);

/// Transparent hashing so sets of cyclic words can be probed with canonical
/// letter spans without allocating.
struct CyclicWordHash {
  using is_transparent = void;
  std::size_t operator()(const CyclicWord& w) const noexcept { return w.hash(); }
  std::size_t operator()(std::span<const Letter> s) const noexcept { return hash_letters(s); }
};

struct CyclicWordEq {
  using is_transparent = void;
  static bool same(std::span<const Letter> a, std::span<const Letter> b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  bool operator()(const CyclicWord& a, const CyclicWord& b) const { return a == b; }
  bool operator()(const CyclicWord& a, std::span<const Letter> b) const { return same(a.letters(), b); }
  bool operator()(std::span<const Letter> a, const CyclicWord& b) const { return same(a, b.letters()); }
};

using CyclicWordSet = std::unordered_set<CyclicWord, CyclicWordHash, CyclicWordEq>;

/// True iff `pattern` occurs contiguously in `host` read cyclically.
/// Patterns longer than the host never occur.
bool is_subword_cyclic(const Word& pattern, const CyclicWord& host);
bool is_subword_cyclic(const Word& pattern, std::span<const Letter> cyclic_host);
bool is_subword(const Word& pattern, const Word& host);

/// Start positions (0-based, in host order) of cyclic occurrences.
std::vector<std::size_t> cyclic_occurrences(const Word& pattern, std::span<const Letter> cyclic_host);

/// Maximum number of pairwise disjoint cyclic occurrences of `pattern`.
std::size_t count_disjoint_occurrences_cyclic(const Word& pattern, const CyclicWord& host);
std::size_t count_disjoint_occurrences_cyclic(const Word& pattern, std::span<const Letter> cyclic_host);

/// Some generator x_i (i <= r) occurs at most once, counting both signs.
bool is_slender(const Word& w, int rank);
/// Consecutive chunks of length 2r-1 (the last may be shorter).
std::vector<Word> slender_decompose(const Word& w, int rank);

using Rng = std::mt19937_64;

/// Uniform over cyclically reduced words of length n in F_r.
Word random_cyclically_reduced(std::size_t n, int rank, Rng& rng);
Word random_cyclically_reduced(std::size_t n, int rank, std::uint64_t seed);
/// Uniform over freely reduced words of length n in F_r.
Word random_reduced(std::size_t n, int rank, Rng& rng);

/// Throws std::invalid_argument unless rank >= 2.
void check_rank(int rank);
/// Throws std::invalid_argument if `w` uses a generator above `rank`.
void check_word_rank(const Word& w, int rank);

}  // namespace fgkit

template <>
struct std::hash<fgkit::CyclicWord> {
  std::size_t operator()(const fgkit::CyclicWord& w) const noexcept {
    return w.hash();
  }
};
