#include "fgkit/pb_f2.hpp"

#include <algorithm>
#include <optional>

namespace fgkit {

SyllableWord::SyllableWord(std::vector<Syllable> syllables) {
  for (const Syllable& s : syllables) {
    if (s.exponent == 0) continue;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
      syllables_.back().exponent += s.exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
  }
}

SyllableWord SyllableWord::from_word(const Word& w) {
  std::vector<Syllable> out;
  for (Letter l : w) {
    if (l.generator() > 2) throw std::invalid_argument("word is not in F2: '" + w.to_string() + "'");
    if (!out.empty() && out.back().generator == l.generator()) {
      out.back().exponent += l.sign();
    } else {
      out.push_back({l.generator(), l.sign()});
    }
  }
  SyllableWord s;
  s.syllables_ = std::move(out);
  return s;
}

Word SyllableWord::to_word() const {
  std::vector<Letter> raw;
  for (const Syllable& s : syllables_) {
    const Letter l(s.generator, s.exponent < 0);
    for (long k = 0; k < std::abs(s.exponent); ++k) raw.push_back(l);
  }
  return Word(raw);
}

long SyllableWord::length() const {
  long n = 0;
  for (const Syllable& s : syllables_) n += std::abs(s.exponent);
  return n;
}

EndoMap shrink_map(long t) {
  return EndoMap(2, {Word::generator(1) * Word::generator(2).power(-t), Word::generator(2)});
}

SyllableWord throwaway_normalize(const SyllableWord& w, long t) {
  std::vector<Syllable> s = w.syllables();
  long q = 0;
  for (const Syllable& x : s) {
    if (x.exponent <= 0) throw std::invalid_argument("throwaway_normalize expects a positive word");
    if (x.generator == 2) q = std::max(q, x.exponent);
  }
  if (!s.empty() && s.front().generator == 2) {
    if (s.front().exponent == q) {
      s.insert(s.begin(), Syllable{1, 1});
    } else {
      s.erase(s.begin());
    }
  }
  if (s.empty() || s.back().generator == 1) {
    if (t > 0) s.push_back({2, t});
  } else if (s.back().exponent < t) {
    s.back().exponent = t;
  }
  return SyllableWord(std::move(s));
}

namespace {

// Relabellings used to normalise the working word. Each is a type I
// automorphism, so pb-status is unchanged.
SyllableWord swap_generators(const SyllableWord& w) {
  std::vector<Syllable> s = w.syllables();
  for (Syllable& x : s) x.generator = 3 - x.generator;
  return SyllableWord(std::move(s));
}

SyllableWord invert_generator(const SyllableWord& w, int g) {
  std::vector<Syllable> s = w.syllables();
  for (Syllable& x : s) {
    if (x.generator == g) x.exponent = -x.exponent;
  }
  return SyllableWord(std::move(s));
}

// +1 / -1 if every syllable of g is g^+1 / g^-1 (vacuously +1 if g is absent).
int unit_sign(const SyllableWord& w, int g) {
  bool pos = true;
  bool neg = true;
  for (const Syllable& x : w.syllables()) {
    if (x.generator != g) continue;
    pos = pos && x.exponent == 1;
    neg = neg && x.exponent == -1;
  }
  return pos ? 1 : (neg ? -1 : 0);
}

class Tracer {
 public:
  explicit Tracer(PbF2Result& r) : r_(r) {}
  void operator()(int iteration, int step, const SyllableWord& w, std::string note) {
    r_.trace.push_back({iteration, step, w.to_string(), std::move(note)});
  }

 private:
  PbF2Result& r_;
};

}  // namespace

PbF2Result decide_pb_f2(const Word& w) {
  PbF2Result result;
  Tracer trace(result);
  SyllableWord u = SyllableWord::from_word(w);
  if (w.size() <= 1) {
    trace(0, 1, u, "at most one letter: subword of a primitive generator");
    return result;
  }

  // Step 1: some generator occurs only as x^1 or only as x^-1.
  int sign_a = unit_sign(u, 1);
  if (sign_a == 0) {
    const int sign_b = unit_sign(u, 2);
    if (sign_b == 0) {
      trace(0, 1, u, "no generator with unit exponents only: blocking");
      result.blocking = true;
      return result;
    }
    u = swap_generators(u);
    sign_a = sign_b;
  }
  if (sign_a < 0) u = invert_generator(u, 1);
  trace(0, 1, u, "a occurs only as a^1");

  // Step 2: b-exponents share a sign.
  bool b_pos = false;
  bool b_neg = false;
  for (const Syllable& x : u.syllables()) {
    if (x.generator != 2) continue;
    b_pos = b_pos || x.exponent > 0;
    b_neg = b_neg || x.exponent < 0;
  }
  if (b_pos && b_neg) {
    trace(0, 2, u, "b-exponents of both signs: blocking");
    result.blocking = true;
    return result;
  }
  if (b_neg) u = invert_generator(u, 2);
  trace(0, 2, u, "word is positive");

  const long initial_length = u.length();
  for (int iteration = 1;; ++iteration) {
    result.loop_iterations = iteration;
    if (iteration > initial_length + 1) {
      throw std::logic_error("pb_f2 loop failed to shorten the word");
    }
    const auto& s = u.syllables();
    const long pass_length = u.length();

    // Step 3: interior b-exponents lie in {t, t+1}.
    std::vector<std::size_t> a_pos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].generator == 1) a_pos.push_back(i);
    }
    if (a_pos.size() <= 1) {
      // b^k a b^l is a subword of the cyclically reduced primitive b^k a b^l.
      trace(iteration, 3, u, "at most one a: not blocking");
      return result;
    }
    long lo = 0;
    long hi = 0;
    bool first = true;
    for (std::size_t i = a_pos.front() + 1; i < a_pos.back(); ++i) {
      if (s[i].generator != 2) continue;
      lo = first ? s[i].exponent : std::min(lo, s[i].exponent);
      hi = first ? s[i].exponent : std::max(hi, s[i].exponent);
      first = false;
    }
    if (hi - lo > 1) {
      trace(iteration, 3, u, "interior b-exponents spread more than 1: blocking");
      result.blocking = true;
      return result;
    }
    // All interior syllables are b^lo or b^(lo+1); t = lo keeps t >= 1.
    const long t = lo;
    trace(iteration, 3, u, "t = " + std::to_string(t));

    // Step 4: boundary b-exponents are at most t+1.
    const long leading = s.front().generator == 2 ? s.front().exponent : 0;
    const long trailing = s.back().generator == 2 ? s.back().exponent : 0;
    if (leading > t + 1 || trailing > t + 1) {
      trace(iteration, 4, u, "boundary b-exponent exceeds t+1: blocking");
      result.blocking = true;
      return result;
    }
    trace(iteration, 4, u, "boundary exponents within t+1");

    // Step 5: normalise the boundary syllables.
    u = throwaway_normalize(u, t);
    trace(iteration, 5, u, "form a b^m1 ... a b^mp");

    // Step 6: shrink.
    u = SyllableWord::from_word(shrink_map(t).apply(u.to_word()));
    trace(iteration, 6, u, "applied a -> a b^-" + std::to_string(t));
    if (u.length() >= pass_length) throw std::logic_error("pb_f2 pass did not shorten the word");

    // Step 7: swap and test for at most two syllables.
    u = swap_generators(u);
    if (u.size() <= 2) {
      trace(iteration, 7, u, "two or fewer syllables: not blocking");
      return result;
    }
    trace(iteration, 7, u, "swapped a and b");
  }
}

bool is_pb_f2(const Word& w) { return decide_pb_f2(w).blocking; }

namespace {

// Parses a word in which a occurs only positively into the list of
// b-exponents following each a, plus the b-exponent before the first a.
struct APattern {
  long leading = 0;
  std::vector<long> after;  // after[i] = exponent of b following the i-th a
};

std::optional<APattern> a_pattern(const Word& w) {
  if (w.max_generator() > 2) return std::nullopt;
  APattern p;
  for (Letter l : w) {
    if (l.generator() == 1) {
      if (l.inverted()) return std::nullopt;
      p.after.push_back(0);
    } else if (p.after.empty()) {
      p.leading += l.sign();
    } else {
      p.after.back() += l.sign();
    }
  }
  return p;
}

bool fits_unit_window(const std::vector<long>& values) {
  if (values.empty()) return true;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo <= 1;
}

bool cohen_shape(const std::vector<long>& m, const Word& v) {
  const auto p = a_pattern(v);
  if (!p || p->after.empty()) return false;
  // v = b^r1 a b^n1 ... a b^nq a b^r2
  std::vector<long> values = m;
  values.push_back(p->leading + p->after.back());
  values.insert(values.end(), p->after.begin(), p->after.end() - 1);
  return fits_unit_window(values);
}

}  // namespace

bool is_cohen_form(const Word& u, const Word& v) {
  if (u.empty() || u.front() != Letter(1, false)) return false;
  const auto pu = a_pattern(u);
  if (!pu) return false;
  return cohen_shape(pu->after, v) || cohen_shape(pu->after, v.inverse());
}

}  // namespace fgkit
