#include "fgkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace fgkit {

char Letter::to_char() const {
  const int g = generator();
  if (g < 1 || g > 26) throw std::out_of_range("letter has no text form beyond x26");
  return static_cast<char>((inverted() ? 'A' : 'a') + g - 1);
}

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) push_back_reduce(l);
}

bool Word::push_back_reduce(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
    return true;
  }
  letters_.push_back(l);
  return false;
}

Word Word::parse(std::string_view text) {
  if (text == "1") return Word();
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed word text '" + std::string(text) + "' at offset " +
                                  std::to_string(i));
    }
    const bool inv = std::isupper(static_cast<unsigned char>(c));
    const int gen = (inv ? c - 'A' : c - 'a') + 1;
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr == first) {
        throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
      }
      i += static_cast<std::size_t>(ptr - first);
    }
    const Letter l(gen, exponent < 0 ? !inv : inv);
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) raw.push_back(l);
  }
  return Word(raw);
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(it->inverse());
  return out;
}

Word Word::power(long n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) {
    for (Letter l : base) out.push_back_reduce(l);
  }
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.generator());
  return m;
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

bool Word::operator<(const Word& o) const {
  return std::lexicographical_compare(letters_.begin(), letters_.end(), o.letters_.begin(),
                                      o.letters_.end());
}

Word free_reduce(std::span<const Letter> raw) { return Word(raw); }

ConcatResult concat(const Word& u, const Word& v) {
  ConcatResult r{u, 0};
  for (Letter l : v) {
    if (r.word.push_back_reduce(l)) ++r.cancelled_pairs;
  }
  return r;
}

Word operator*(const Word& u, const Word& v) { return concat(u, v).word; }

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {w.subword(lo, hi - lo), w.subword(0, lo)};
}

std::size_t least_rotation(std::span<const Letter> s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

void canonical_cyclic_form(std::span<const Letter> w, std::vector<Letter>& out) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == w[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  const auto s = w.subspan(lo, hi - lo);
  const auto start = static_cast<std::ptrdiff_t>(least_rotation(s));
  out.clear();
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + start, s.end());
  out.insert(out.end(), s.begin(), s.begin() + start);
}

CyclicWord::CyclicWord(std::span<const Letter> w) { canonical_cyclic_form(w, letters_); }

std::size_t hash_letters(std::span<const Letter> letters) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : letters) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint8_t>(l.signed_value()));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t CyclicWord::hash() const noexcept { return hash_letters(letters_); }

std::string CyclicWord::key() const {
  std::string k;
  k.reserve(letters_.size());
  for (Letter l : letters_) k.push_back(static_cast<char>(l.signed_value()));
  return k;
}

bool CyclicWord::operator<(const CyclicWord& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return std::lexicographical_compare(letters_.begin(), letters_.end(), o.letters_.begin(),
                                      o.letters_.end());
}

namespace {

std::vector<std::size_t> failure_function(std::span<const Letter> p) {
  std::vector<std::size_t> fail(p.size(), 0);
  for (std::size_t i = 1, k = 0; i < p.size(); ++i) {
    while (k > 0 && p[i] != p[k]) k = fail[k - 1];
    if (p[i] == p[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

}  // namespace

std::vector<std::size_t> cyclic_occurrences(const Word& pattern, std::span<const Letter> host) {
  std::vector<std::size_t> starts;
  const std::size_t m = pattern.size();
  const std::size_t n = host.size();
  if (m == 0 || m > n) return starts;
  const auto p = pattern.letters();
  const auto fail = failure_function(p);
  std::size_t k = 0;
  // Doubled stream: every start position 0..n-1 is covered once.
  for (std::size_t i = 0; i < n + m - 1; ++i) {
    const Letter c = host[i % n];
    while (k > 0 && c != p[k]) k = fail[k - 1];
    if (c == p[k]) ++k;
    if (k == m) {
      starts.push_back(i + 1 - m);
      k = fail[k - 1];
    }
  }
  return starts;
}

bool is_subword_cyclic(const Word& pattern, std::span<const Letter> host) {
  return !cyclic_occurrences(pattern, host).empty();
}

bool is_subword_cyclic(const Word& pattern, const CyclicWord& host) {
  return is_subword_cyclic(pattern, host.letters());
}

bool is_subword(const Word& pattern, const Word& host) {
  return std::search(host.begin(), host.end(), pattern.begin(), pattern.end()) != host.end() ||
         pattern.empty();
}

std::size_t count_disjoint_occurrences_cyclic(const Word& pattern, std::span<const Letter> host) {
  const std::size_t m = pattern.size();
  const std::size_t n = host.size();
  const auto occ = cyclic_occurrences(pattern, host);
  if (occ.empty()) return 0;
  // Unrolled occurrence list over two laps of the circle.
  std::vector<std::size_t> unrolled(occ);
  for (std::size_t s : occ) unrolled.push_back(s + n);

  auto greedy_from = [&](std::size_t first) {
    const std::size_t start = unrolled[first];
    std::size_t count = 1;
    std::size_t next_free = start + m;
    auto it = std::lower_bound(unrolled.begin(), unrolled.end(), next_free);
    while (it != unrolled.end() && *it + m <= start + n) {
      ++count;
      next_free = *it + m;
      it = std::lower_bound(it, unrolled.end(), next_free);
    }
    return count;
  };

  // A maximal packing contains an occurrence overlapping the arc of occ[0];
  // those start within (occ[0] - m, occ[0] + m) on the circle.
  std::size_t best = 0;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const std::size_t s = occ[i];
    const std::size_t d_fwd = s - occ[0];
    const std::size_t d_back = n - d_fwd;
    if (d_fwd < m || (d_fwd != 0 && d_back < m)) best = std::max(best, greedy_from(i));
  }
  return best;
}

std::size_t count_disjoint_occurrences_cyclic(const Word& pattern, const CyclicWord& host) {
  return count_disjoint_occurrences_cyclic(pattern, host.letters());
}

bool is_slender(const Word& w, int rank) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(rank) + 1, 0);
  for (Letter l : w) {
    if (l.generator() <= rank) ++counts[static_cast<std::size_t>(l.generator())];
  }
  return std::any_of(counts.begin() + 1, counts.end(), [](std::size_t c) { return c <= 1; });
}

std::vector<Word> slender_decompose(const Word& w, int rank) {
  check_rank(rank);
  const std::size_t chunk = static_cast<std::size_t>(2 * rank - 1);
  std::vector<Word> out;
  for (std::size_t pos = 0; pos < w.size(); pos += chunk) {
    out.push_back(w.subword(pos, std::min(chunk, w.size() - pos)));
  }
  return out;
}

Word random_reduced(std::size_t n, int rank, Rng& rng) {
  check_rank(rank);
  const int letters = 2 * rank;
  std::vector<Letter> out;
  out.reserve(n);
  std::uniform_int_distribution<int> first(0, letters - 1);
  std::uniform_int_distribution<int> next(0, letters - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (out.empty()) {
      out.push_back(Letter::from_index(first(rng)));
      continue;
    }
    // Skip the index of the inverse of the previous letter.
    const int forbidden = out.back().inverse().index();
    int idx = next(rng);
    if (idx >= forbidden) ++idx;
    out.push_back(Letter::from_index(idx));
  }
  return Word(out);
}

Word random_cyclically_reduced(std::size_t n, int rank, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_cyclically_reduced: n must be >= 1");
  for (;;) {
    Word w = random_reduced(n, rank, rng);
    if (w.is_cyclically_reduced()) return w;
  }
}

Word random_cyclically_reduced(std::size_t n, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_cyclically_reduced(n, rank, rng);
}

void check_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2, got " + std::to_string(rank));
}

void check_word_rank(const Word& w, int rank) {
  if (w.max_generator() > rank) {
    throw std::invalid_argument("word '" + w.to_string() + "' uses generators beyond rank " +
                                std::to_string(rank));
  }
}

}  // namespace fgkit
