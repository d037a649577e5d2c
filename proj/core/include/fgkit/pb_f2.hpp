#pragma once

// Exact decision of primitivity-blocking words in F(a, b).
//
// The decider normalises the word so that a occurs only as a^1 and b only with
// positive exponents, then loops: pick t from the interior b-exponents, trim
// or extend the boundary b-syllables, shrink by a -> a b^-t, swap a and b.
// Each pass strictly shortens the word, so there are at most |w| passes.

#include <string>
#include <vector>

#include "fgkit/automorphism.hpp"
#include "fgkit/word.hpp"

namespace fgkit {

struct Syllable {
  int generator;  // 1 = a, 2 = b
  long exponent;  // nonzero
  bool operator==(const Syllable&) const = default;
};

/// Maximal single-generator power blocks of a word over {a, b}.
class SyllableWord {
 public:
  SyllableWord() = default;
  explicit SyllableWord(std::vector<Syllable> syllables);
  static SyllableWord from_word(const Word& w);

  Word to_word() const;
  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  long length() const;
  std::string to_string() const { return to_word().to_string(); }

  bool operator==(const SyllableWord&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

struct PbTraceEntry {
  int iteration;  // 0 for Steps 1-2, then 1, 2, ... for each loop pass
  int step;       // 1..7
  std::string word;
  std::string note;
};

struct PbF2Result {
  bool blocking = false;
  int loop_iterations = 0;
  std::vector<PbTraceEntry> trace;
};

/// Full decision with a step-by-step trace.
PbF2Result decide_pb_f2(const Word& w);
/// True iff `w` is a subword of no cyclically reduced primitive element of F2.
bool is_pb_f2(const Word& w);

/// Boundary normalisation on a positive word: a leading b^n is dropped when n
/// is below the largest b-exponent q and gets an `a` prepended when n = q; a
/// trailing b-exponent below t is raised to t.
SyllableWord throwaway_normalize(const SyllableWord& w, long t);

/// a -> a b^-t, b -> b.
EndoMap shrink_map(long t);

/// Literal shape test for the rank-2 basis normal form:
///   u = a b^m1 ... a b^mp,  v = (b^r1 a b^n1 ... a b^nq a b^r2)^(+-1)
/// with {m_i} and {r1 + r2, n_j} inside a common {t, t+1}.
bool is_cohen_form(const Word& u, const Word& v);

}  // namespace fgkit
