// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fgkit/blockers.hpp"
#include "fgkit/hybrid.hpp"
#include "fgkit/oracle.hpp"
#include "fgkit/pb_f2.hpp"
#include "fgkit/whitehead_algorithm.hpp"
#include "fgkit/whitehead_graph.hpp"
#include "fgkit/word.hpp"

using namespace fgkit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("violated: " + what);
    }
  }
  template <class... T>
  void note(T&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    notes.push_back(os.str());
  }
};

Word W(const char* s) { return Word::parse(s); }

void all_reduced(std::size_t n, int rank, const std::function<void(const Word&)>& f) {
  std::vector<Letter> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == n) {
      f(Word(cur));
      return;
    }
    for (int i = 0; i < 2 * rank; ++i) {
      const Letter l = Letter::from_index(i);
      if (!cur.empty() && cur.back() == l.inverse()) continue;
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

std::string fmt(double x, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

// Shared enumerations, built on first use.
const PbRefuter& refuter_r2() {
  static const PbRefuter r(2, 14, 7);
  return r;
}
const PbRefuter& refuter_r3() {
  static const PbRefuter r(3, 10, 5);
  return r;
}

Outcome criterion1() {
  Outcome o;
  std::ostringstream out, err;
  const char* argv[] = {"fgkit", "pb2", "Aba"};
  const int code = cli::run(3, argv, out, err);
  o.require(code == cli::kExitTrue && out.str() == "true\n", "`pb2 Aba` prints true with exit 0");

  const auto aba = refute_pb(W("Aba"), 2, 12);
  o.require(!aba, "refute_pb(Aba, 2, 12) finds no witness");
  if (aba) o.note("witness for Aba: ", aba->to_string());

  const PbRefuter& r3 = refuter_r3();
  o.note("primitives_up_to(3, 10): ", r3.primitive_count(), " cyclic words");
  const auto short3 = r3.witness(W("abccbA"));
  o.require(!short3, "refute_pb(abccbA, 3, 10) finds no witness");

  std::size_t total = 0;
  std::size_t length5 = 0;
  std::vector<std::string> unresolved;
  for (std::size_t n = 1; n <= 5; ++n) {
    all_reduced(n, 3, [&](const Word& w) {
      ++total;
      if (n == 5) ++length5;
      if (!r3.witness(w)) unresolved.push_back(w.to_string());
    });
  }
  o.note("rank-3 words of length <= 5: ", total, " (", length5, " of length exactly 5), unresolved: ",
         unresolved.size());
  for (const auto& u : unresolved) o.note("  unresolved: ", u);
  o.require(length5 == 3750, "3750 words of length 5");
  o.require(unresolved.empty(), "every rank-3 word of length <= 5 has a witness");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const PbRefuter& r2 = refuter_r2();
  std::size_t total = 0, length7 = 0, blocking = 0, violations = 0, nonblocking = 0, covered = 0;
  std::vector<std::string> uncovered;
  for (std::size_t n = 1; n <= 7; ++n) {
    all_reduced(n, 2, [&](const Word& w) {
      ++total;
      if (n == 7) ++length7;
      const bool pb = is_pb_f2(w);
      const auto wit = r2.witness(w);
      if (pb) {
        ++blocking;
        if (wit) {
          ++violations;
          o.note("soundness violation: ", w.to_string(), " inside ", wit->to_string());
        }
      } else {
        ++nonblocking;
        if (wit) {
          ++covered;
        } else {
          uncovered.push_back(w.to_string());
        }
      }
    });
  }
  o.note("F2 words of length 1..7: ", total, " (", length7, " of length 7); primitives_up_to(2, 14): ",
         r2.primitive_count());
  o.note("blocking: ", blocking, ", soundness violations: ", violations);
  o.note("non-blocking: ", nonblocking, ", witnessed at L <= 14: ", covered, " (coverage ",
         fmt(100.0 * static_cast<double>(covered) / static_cast<double>(std::max<std::size_t>(nonblocking, 1)), 2),
         "%)");
  for (const auto& u : uncovered) o.note("  no witness: ", u);
  o.require(length7 == 2916, "2916 words of length 7");
  o.require(violations == 0, "zero soundness violations");
  o.require(uncovered.empty(), "100% completeness coverage");
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.require(is_pb_f2(W("aabb")), "is_pb_f2(aabb)");
  o.require(is_pb_f2(W("aaabbb")), "is_pb_f2(aaabbb)");
  const auto abc = refute_pb(W("abc"), 3, 8);
  o.require(abc.has_value(), "refute_pb(abc, 3, 8) returns a witness");
  if (abc) o.note("abc inside ", abc->to_string());
  const auto a2b2c2 = refuter_r3().witness(W("aabbcc"));  // same enumeration as refute_pb(aabbcc, 3, 10)
  o.require(a2b2c2.has_value(), "refute_pb(aabbcc, 3, 10) returns a witness");
  if (a2b2c2) o.note("aabbcc inside ", a2b2c2->to_string());
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t n2 = 0, n3 = 0, fail2 = 0, fail3 = 0;
  for (const CyclicWord& p : refuter_r2().primitives()) {
    if (p.size() > 10) continue;
    ++n2;
    if (!passes_cut_vertex_test(p.word(), 2)) {
      ++fail2;
      o.note("rank 2 primitive without cut vertex: ", p.to_string());
    }
  }
  for (const CyclicWord& p : refuter_r3().primitives()) {
    if (p.size() > 8) continue;
    ++n3;
    if (!passes_cut_vertex_test(p.word(), 3)) {
      ++fail3;
      o.note("rank 3 primitive without cut vertex: ", p.to_string());
    }
  }
  o.note("primitives_up_to(2, 10): ", n2, " checked; primitives_up_to(3, 8): ", n3, " checked");
  o.require(n2 == primitives_up_to(2, 10).size(), "rank-2 subset equals primitives_up_to(2, 10)");
  o.require(fail2 == 0 && fail3 == 0, "every primitive passes the cut vertex test");
  o.require(!passes_cut_vertex_test(W("ABab"), 2), "passes_cut_vertex_test(ABab) = false");
  return o;
}

struct BallChecks {
  Outcome counting;
  Outcome blocking;
};

BallChecks criteria5and6() {
  BallChecks out;
  const char* words[] = {"a", "ab", "aab", "ABab"};
  for (int r : {2, 3}) {
    const std::size_t radius = r == 2 ? 14 : 12;
    const Word unit = r == 2 ? W("aabba") : pb_unit(r);
    // A ball is the closed component of its seed, so a seed already inside
    // a computed ball has exactly that ball.
    std::vector<OrbitBall> computed;
    computed.reserve(std::size(words));
    for (const char* s : words) {
      const Word w = W(s);
      const std::size_t ell = CyclicWord(w).size();
      const auto t0 = std::chrono::steady_clock::now();
      const OrbitBall* found = nullptr;
      for (const OrbitBall& b : computed) {
        if (b.members.contains(CyclicWord(w))) found = &b;
      }
      if (!found) {
        try {
          computed.push_back(orbit_ball(w, r, radius));
        } catch (const CapExceeded& e) {
          out.counting.require(false, std::string("orbit ball of ") + s + " fits the cap: " + e.what());
          out.blocking.require(false, std::string("orbit ball of ") + s + " fits the cap");
          continue;
        }
        found = &computed.back();
      }
      const OrbitBall& ball = *found;
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

      const CountingReport cr = max_disjoint_occurrences(ball, unit);
      out.counting.note("r=", r, " w=", s, " L=", radius, " ball=", ball.members.size(), " unit=", unit.to_string(),
                        " max=", cr.max_count, " bound=", ell, " (", fmt(secs, 1), "s",
                        ball.seed == CyclicWord(w) ? "" : ", shared ball of " + ball.seed.to_string(), ")");
      out.counting.require(cr.max_count <= ell, "count bound for " + std::string(s) + " at rank " + std::to_string(r));

      const BlockerSpec b = orbit_blocker(w, r);
      const BlockingReport br = verify_orbit_blocking(ball, b.product);
      const std::size_t expected = r == 2 ? (2 * r + 1) * (ell + 1) : 2 * r * (ell + 1);
      out.blocking.note("r=", r, " w=", s, " |blocker|=", b.product.size(), " expected=", expected,
                        " ball=", br.ball_size, " ", br.passed ? "blocks" : "FAILS");
      if (br.counterexample) out.blocking.note("  counterexample: ", br.counterexample->to_string());
      out.blocking.require(br.passed, "blocker of " + std::string(s) + " blocks the rank-" + std::to_string(r) + " ball");
      out.blocking.require(b.product.size() == expected, "blocker length for " + std::string(s));

      if (r >= 3) {
        const std::size_t slender = orbit_blocker_slender(w, r).product.size();
        const std::size_t chunk = 2 * static_cast<std::size_t>(r) - 1;
        const std::size_t bound = 2 * r * ((ell + chunk - 1) / chunk + 1);
        out.blocking.note("  slender |blocker|=", slender, " <= ", bound);
        out.blocking.require(slender <= bound, "slender length bound for " + std::string(s));
      }
    }
  }
  const std::size_t ex = orbit_blocker_slender(W("aabbcc"), 3).product.size();
  out.blocking.note("slender blocker of aabbcc at rank 3: length ", ex);
  out.blocking.require(ex == 18, "slender example length 18");
  return out;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(7007);
  std::size_t bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int r = 2 + i % 2;
    std::uniform_int_distribution<int> steps(1, 8);
    const Word img = random_automorphism(r, steps(rng), rng).image(1);
    if (!is_primitive(img, r)) {
      ++bad;
      o.note("image judged non-primitive: ", img.to_string());
    }
  }
  o.require(bad == 0, "200 automorphic images of x1 are primitive");
  for (const char* s : {"aa", "ABab", "aabb"}) {
    o.require(!is_primitive(W(s), 2), std::string("is_primitive(") + s + ") = false");
  }

  bad = 0;
  for (int i = 0; i < 200; ++i) {
    const int r = 2 + i % 2;
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> steps(1, 8);
    const Word u = random_reduced(static_cast<std::size_t>(len(rng)), r, rng);
    const Word v = random_automorphism(r, steps(rng), rng).apply(u);
    if (!same_orbit(u, v, r)) {
      ++bad;
      o.note("same_orbit missed: ", u.to_string(), " ~ ", v.to_string());
    }
  }
  o.require(bad == 0, "same_orbit(u, phi(u)) on 200 random pairs");

  std::vector<Word> words;
  for (std::size_t n = 1; n <= 4; ++n) all_reduced(n, 2, [&](const Word& w) { words.push_back(w); });
  std::size_t pairs = 0, disagree = 0, same = 0;
  for (const Word& u : words) {
    const OrbitBall ball = orbit_ball(u, 2, 4);
    for (const Word& v : words) {
      ++pairs;
      const bool reach = ball.members.contains(CyclicWord(v));
      const bool so = same_orbit(u, v, 2);
      same += so ? 1 : 0;
      if (reach != so) {
        ++disagree;
        if (disagree <= 10) o.note("disagreement: ", u.to_string(), " vs ", v.to_string());
      }
    }
  }
  o.note("F2 pairs of length <= 4: ", pairs, ", in one orbit: ", same, ", disagreements: ", disagree);
  o.require(disagree == 0, "same_orbit agrees with orbit-ball reachability");
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Equivalence on mixed inputs.
  std::vector<FixedTarget> targets{precompute(W("ab"), 2), precompute(W("ABab"), 2), precompute(W("aab"), 2),
                                   precompute(W("ab"), 3)};
  Rng rng(8008);
  std::size_t mismatches = 0, planted = 0, accepted = 0;
  std::map<std::string, std::size_t> routes;
  for (int i = 0; i < 10000; ++i) {
    const FixedTarget& t = targets[static_cast<std::size_t>(i) % targets.size()];
    Word v;
    std::uniform_int_distribution<std::size_t> len(1, 300);
    if (i % 2 == 0) {
      ++planted;
      std::uniform_int_distribution<int> steps(1, 12);
      v = random_automorphism(t.rank, steps(rng), rng).apply(t.original);
    } else if (i % 4 == 1) {
      v = random_cyclically_reduced(len(rng), t.rank, rng);
    } else {
      // Random word followed by the blocker; the join may cancel a little.
      v = random_cyclically_reduced(len(rng), t.rank, rng) * t.blocker.product;
    }
    const Decision race = decide(t, v, Strategy::race);
    const Decision full = decide(t, v, Strategy::full);
    ++routes[to_string(race.route)];
    accepted += full.answer ? 1 : 0;
    if (race.answer != full.answer) {
      ++mismatches;
      if (mismatches <= 10) o.note("mismatch on ", v.to_string());
    }
  }
  o.note("10000 inputs (", planted, " planted orbit members, ", 10000 - planted,
         " random, half of those carrying the blocker), accepted: ", accepted, ", race/full mismatches: ", mismatches);
  for (const auto& [k, n] : routes) o.note("  race route ", k, ": ", n);
  o.require(mismatches == 0, "race answers equal full-only answers");

  // Average case for u = ab.
  const FixedTarget t = precompute(W("ab"), 2);
  const std::size_t blen = t.blocker.product.size();
  const std::vector<std::size_t> lengths{1u << 10, 1u << 12, 1u << 14, 1u << 16};
  const auto rows = bench_average_case(t, lengths, 200, 1);
  o.note("blocker length ", blen, "; n, mean_letters, p95_letters, mean_ns, reject_fraction, "
         "P(letters > 2|B|), P(letters > 4|B|)");
  bool decay_ok = true;
  for (const BenchRow& r : rows) {
    std::size_t over2 = 0, over4 = 0;
    for (std::size_t l : r.letters) {
      over2 += l > 2 * blen ? 1 : 0;
      over4 += l > 4 * blen ? 1 : 0;
    }
    const double p2 = static_cast<double>(over2) / static_cast<double>(r.samples);
    const double p4 = static_cast<double>(over4) / static_cast<double>(r.samples);
    o.note("  ", r.n, ", ", fmt(r.mean_letters, 1), ", ", r.p95_letters, ", ", fmt(r.mean_ns, 0), ", ",
           fmt(r.reject_fraction), ", ", fmt(p2), ", ", fmt(p4));
    if (p4 > 0.5 * p2) decay_ok = false;
  }
  const double letter_ratio = rows.back().mean_letters / rows.front().mean_letters;
  const double time_ratio = rows.back().mean_ns / rows.front().mean_ns;
  o.note("mean letters ratio (2^16 / 2^10): ", fmt(letter_ratio), "; mean time ratio: ", fmt(time_ratio));
  o.require(letter_ratio >= 0.8 && letter_ratio <= 1.25, "mean letters ratio within [0.8, 1.25]");
  o.require(time_ratio <= 1.5, "mean wall time ratio <= 1.5");
  o.require(decay_ok, "P(letters > 4|B|) <= P(letters > 2|B|) / 2 at every n");
  return o;
}

Outcome criterion9() {
  Outcome o;
  Rng rng(9009);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  std::size_t pairs = 0, cond = 0, minimal = 0, caps = 0;
  std::size_t max_m = 0;
  while (pairs < 500) {
    const int r = 2 + static_cast<int>(pairs % 2);
    const Word w = random_reduced(len(rng), r, rng);
    const Word v = random_reduced(len(rng), r, rng);
    if (w * v == v * w) continue;
    ++pairs;
    std::size_t m = 0;
    try {
      m = encapsulation_exponent(w, v);
    } catch (const std::logic_error&) {
      ++caps;
      o.note("cap triggered on (", w.to_string(), ", ", v.to_string(), ")");
      continue;
    }
    max_m = std::max(max_m, m);
    auto ok = [&](std::size_t k) {
      const Word u = encapsulate(w, v, k);
      return !u.empty() && u.front() == w.front() && u.back() == w.inverse().back();
    };
    cond += ok(m) ? 1 : 0;
    bool least = true;
    for (std::size_t k = 0; k < m; ++k) least = least && !ok(k);
    minimal += least ? 1 : 0;
  }
  o.note(pairs, " pairs; conditions hold: ", cond, "; least: ", minimal, "; cap triggers: ", caps,
         "; largest m: ", max_m);
  o.require(cond == pairs, "returned m satisfies both letter conditions");
  o.require(minimal == pairs, "no smaller m satisfies them");
  o.require(caps == 0, "safety cap never triggers");
  return o;
}

// Some generator occurs, and every cyclic syllable of it is g or every one is g^-1.
bool has_unit_generator(const CyclicWord& c) {
  const auto& l = c.letters();
  const std::size_t n = l.size();
  for (int g = 1; g <= 2; ++g) {
    int sign = 0;
    bool ok = true;
    bool seen = false;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (l[i].generator() != g) continue;
      seen = true;
      if (sign == 0) sign = l[i].sign();
      ok = l[i].sign() == sign && (n == 1 || l[(i + 1) % n].generator() != g);
    }
    if (seen && ok) return true;
  }
  return false;
}

Outcome criterion10() {
  Outcome o;
  std::size_t checked = 0, bad = 0;
  for (const CyclicWord& p : refuter_r2().primitives()) {
    if (p.size() > 10) continue;
    ++checked;
    if (!has_unit_generator(p)) {
      ++bad;
      o.note("exception: ", p.to_string());
    }
  }
  o.note(checked, " primitives of length <= 10 checked, exceptions: ", bad);
  o.require(bad == 0, "a generator with exponents only +1 or only -1 in every primitive");
  return o;
}

const char* kTitles[] = {"",
                         "shortest primitivity-blocking words",
                         "F2 decision soundness and completeness",
                         "two-generator blocking fixtures",
                         "cut vertex on primitives",
                         "counting invariant over orbit balls",
                         "orbit blocker end-to-end",
                         "Whitehead algorithm",
                         "hybrid equivalence and average case",
                         "encapsulation exponent",
                         "unit-exponent generator in F2 primitives"};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > 10) {
      std::cerr << "usage: acceptance [1..10 ...]\n";
      return 2;
    }
    wanted.insert(k);
  }
  if (wanted.empty()) {
    for (int k = 1; k <= 10; ++k) wanted.insert(k);
  }

  std::optional<BallChecks> balls;
  int failed = 0;
  for (int k : wanted) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    switch (k) {
      case 1: o = criterion1(); break;
      case 2: o = criterion2(); break;
      case 3: o = criterion3(); break;
      case 4: o = criterion4(); break;
      case 5:
      case 6:
        if (!balls) balls = criteria5and6();
        o = k == 5 ? balls->counting : balls->blocking;
        break;
      case 7: o = criterion7(); break;
      case 8: o = criterion8(); break;
      case 9: o = criterion9(); break;
      case 10: o = criterion10(); break;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k << ": " << kTitles[k] << "  [" << fmt(secs, 1)
              << "s]\n";
    for (const auto& n : o.notes) std::cout << "      " << n << '\n';
    std::cout.flush();
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
