#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fgkit/blockers.hpp"
#include "fgkit/hybrid.hpp"
#include "fgkit/oracle.hpp"
#include "fgkit/pb_f2.hpp"
#include "fgkit/whitehead_algorithm.hpp"
#include "fgkit/whitehead_graph.hpp"
#include "fgkit/word.hpp"

namespace fgkit::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string show(const Word& w) { return w.empty() ? "1" : w.to_string(); }
std::string show(const CyclicWord& w) { return w.empty() ? "1" : w.to_string(); }

struct Common {
  int rank = 2;
  bool json = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--rank,-r", c.rank, "Rank of the free group (2..26)")->capture_default_str();
  sub->add_flag("--json", c.json, "Emit one JSON object per result");
}

void check_text_rank(int rank) {
  if (rank < 2 || rank > 26) throw UsageError("rank must be in 2..26 for text words, got " + std::to_string(rank));
}

Word parse_word(const std::string& text, int rank) {
  Word w;
  try {
    w = Word::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (w.max_generator() > rank) {
    throw UsageError("word '" + text + "' uses generators beyond rank " + std::to_string(rank));
  }
  return w;
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad length '" + item + "' in --lengths");
    }
  }
  if (out.empty()) throw UsageError("--lengths is empty");
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FGKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("FGKIT_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

json spec_json(const BlockerSpec& b) {
  json seq = json::array();
  for (const Word& v : b.sequence) seq.push_back(v.to_string());
  return {{"rank", b.rank},      {"ell_or_k", b.bound},        {"slender", b.slender},
          {"sequence", seq},     {"product", b.product.to_string()}, {"length", b.product.size()}};
}

int bool_exit(bool all_true) { return all_true ? kExitTrue : kExitFalse; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free group toolkit: Whitehead minimization, blocking words, orbit deciders"};
  app.name("fgkit");
  app.require_subcommand(1);

  // reduce / cyclic / minimize / primitive
  Common reduce_c, cyclic_c, minimize_c, primitive_c, graph_c, orbit_c, pb2_c, blocker_c, decide_c, bench_c;
  std::vector<std::string> words;

  auto* reduce = app.add_subcommand("reduce", "Free reduction");
  add_common(reduce, reduce_c);
  reduce->add_option("words", words, "Words")->required();

  auto* cyclic = app.add_subcommand("cyclic", "Canonical cyclic word (least rotation of the cyclic reduction)");
  add_common(cyclic, cyclic_c);
  cyclic->add_option("words", words, "Words")->required();

  auto* graph = app.add_subcommand("graph", "Whitehead graph in DOT");
  add_common(graph, graph_c);
  bool no_external = false;
  std::string graph_word;
  graph->add_option("word", graph_word, "Word")->required();
  graph->add_flag("--no-external", no_external, "Omit the wrap-around edge");

  auto* minimize_cmd = app.add_subcommand("minimize", "Whitehead-minimal cyclic word in the orbit");
  add_common(minimize_cmd, minimize_c);
  minimize_cmd->add_option("words", words, "Words")->required();

  auto* primitive = app.add_subcommand("primitive", "Primitivity test");
  add_common(primitive, primitive_c);
  primitive->add_option("words", words, "Words")->required();

  auto* orbit = app.add_subcommand("orbit", "Whether some automorphism takes u to a conjugate of v");
  add_common(orbit, orbit_c);
  std::string orbit_u, orbit_v;
  std::size_t orbit_cap = kDefaultOrbitCap;
  orbit->add_option("u", orbit_u)->required();
  orbit->add_option("v", orbit_v)->required();
  orbit->add_option("--cap", orbit_cap, "Equal-length orbit size cap")->capture_default_str();

  auto* pb2 = app.add_subcommand("pb2", "Primitivity-blocking decision in F2");
  add_common(pb2, pb2_c);
  bool trace = false;
  pb2->add_option("words", words, "Words")->required();
  pb2->add_flag("--trace", trace, "Print every step");

  auto* blocker = app.add_subcommand("blocker", "Orbit-blocking word for w");
  add_common(blocker, blocker_c);
  std::string blocker_w;
  bool slender = false;
  blocker->add_option("word", blocker_w)->required();
  blocker->add_flag("--slender", slender, "Chunked occurrence bound (rank >= 3)");

  auto* decide_cmd = app.add_subcommand("decide", "Fixed-target orbit membership");
  add_common(decide_cmd, decide_c);
  std::string target, mode = "blocking", strategy = "race";
  std::size_t scan_budget = kDefaultScanBudget;
  decide_cmd->add_option("--target,-t", target, "Fixed word u")->required();
  decide_cmd->add_option("--mode", mode, "blocking|slender")->capture_default_str();
  decide_cmd->add_option("--strategy", strategy, "race|scan|full|count")->capture_default_str();
  decide_cmd->add_option("--scan-budget", scan_budget, "Scanner letters per round")->capture_default_str();
  decide_cmd->add_option("words", words, "Query words")->required();

  auto* bench = app.add_subcommand("bench", "Average-case benchmark over random cyclically reduced words");
  add_common(bench, bench_c);
  std::string lengths = "1024,4096,16384,65536", csv_path;
  std::size_t samples = 200;
  std::optional<std::uint64_t> seed;
  bench->add_option("--target,-t", target, "Fixed word u")->required();
  bench->add_option("--mode", mode, "blocking|slender")->capture_default_str();
  bench->add_option("--strategy", strategy, "race|scan|full|count")->capture_default_str();
  bench->add_option("--scan-budget", scan_budget, "Scanner letters per round")->capture_default_str();
  bench->add_option("--lengths", lengths, "Comma-separated word lengths")->capture_default_str();
  bench->add_option("--samples", samples, "Samples per length")->capture_default_str();
  bench->add_option("--seed", seed, "Seed (default: FGKIT_SEED or 1)");
  bench->add_option("--csv", csv_path, "Output CSV path (default: stdout)");

  auto* oracle = app.add_subcommand("oracle", "Bounded brute-force checks");
  oracle->require_subcommand(1);
  Common ball_c, refute_c, verify_c;
  std::size_t max_len = 0;
  std::size_t ball_cap = kDefaultBallCap;
  std::string oracle_w;
  bool verify_slender = false;

  auto* ball = oracle->add_subcommand("ball", "Orbit ball of cyclic words up to a length");
  add_common(ball, ball_c);
  ball->add_option("word", oracle_w)->required();
  ball->add_option("--max-len,-L", max_len, "Radius")->required();
  ball->add_option("--cap", ball_cap, "Member cap")->capture_default_str();

  auto* refute = oracle->add_subcommand("refute-pb", "Find a short primitive containing u (exit 0 if found)");
  add_common(refute, refute_c);
  refute->add_option("word", oracle_w)->required();
  refute->add_option("--max-len,-L", max_len, "Radius")->required();

  auto* verify = oracle->add_subcommand("verify-blocker", "Check the blocker of w against the orbit ball");
  add_common(verify, verify_c);
  verify->add_option("word", oracle_w)->required();
  verify->add_option("--max-len,-L", max_len, "Radius")->required();
  verify->add_option("--cap", ball_cap, "Member cap")->capture_default_str();
  verify->add_flag("--slender", verify_slender, "Use the slender blocker");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (reduce->parsed() || cyclic->parsed()) {
      const Common& c = reduce->parsed() ? reduce_c : cyclic_c;
      check_text_rank(c.rank);
      for (const std::string& s : words) {
        const Word w = parse_word(s, c.rank);
        if (reduce->parsed()) {
          if (c.json) {
            out << json{{"input", s}, {"reduced", show(w)}, {"length", w.size()}}.dump() << '\n';
          } else {
            out << show(w) << '\n';
          }
        } else {
          const CyclicReduction red = cyclic_reduce(w);
          const CyclicWord cw(w);
          if (c.json) {
            out << json{{"input", s}, {"cyclic", show(cw)}, {"conjugator", show(red.conjugator)}, {"length", cw.size()}}
                       .dump()
                << '\n';
          } else {
            out << show(cw) << '\n';
          }
        }
      }
      return kExitTrue;
    }

    if (graph->parsed()) {
      check_text_rank(graph_c.rank);
      const Word w = parse_word(graph_word, graph_c.rank);
      if (w.empty()) throw UsageError("the trivial word has no Whitehead graph");
      const WhiteheadGraph g(graph_c.rank, w, !no_external);
      if (graph_c.json) {
        json edges = json::array();
        for (const auto& [x, y] : g.edges()) edges.push_back({vertex_name(x), vertex_name(y)});
        out << json{{"word", show(w)},
                    {"edges", edges},
                    {"connected", g.is_connected()},
                    {"cut_vertex", g.has_cut_vertex()}}
                   .dump()
            << '\n';
      } else {
        g.write_dot(out);
      }
      return kExitTrue;
    }

    if (minimize_cmd->parsed()) {
      check_text_rank(minimize_c.rank);
      for (const std::string& s : words) {
        const MinimizationResult r = minimize(parse_word(s, minimize_c.rank), minimize_c.rank);
        if (minimize_c.json) {
          json applied = json::array();
          for (const auto& t : r.applied) applied.push_back(describe(WhiteheadAut{t}));
          out << json{{"input", s}, {"minimal", show(r.minimal)}, {"length", r.minimal.size()}, {"steps", r.steps},
                      {"applied", applied}}
                     .dump()
              << '\n';
        } else {
          out << show(r.minimal) << '\n';
        }
      }
      return kExitTrue;
    }

    if (primitive->parsed()) {
      check_text_rank(primitive_c.rank);
      bool all = true;
      for (const std::string& s : words) {
        const bool p = is_primitive(parse_word(s, primitive_c.rank), primitive_c.rank);
        all = all && p;
        if (primitive_c.json) {
          out << json{{"input", s}, {"primitive", p}}.dump() << '\n';
        } else {
          out << (p ? "true" : "false") << '\n';
        }
      }
      return bool_exit(all);
    }

    if (orbit->parsed()) {
      check_text_rank(orbit_c.rank);
      const bool same =
          same_orbit(parse_word(orbit_u, orbit_c.rank), parse_word(orbit_v, orbit_c.rank), orbit_c.rank, orbit_cap);
      if (orbit_c.json) {
        out << json{{"u", orbit_u}, {"v", orbit_v}, {"same_orbit", same}}.dump() << '\n';
      } else {
        out << (same ? "true" : "false") << '\n';
      }
      return bool_exit(same);
    }

    if (pb2->parsed()) {
      if (pb2_c.rank != 2) throw UsageError("pb2 works in rank 2 only");
      bool all = true;
      for (const std::string& s : words) {
        const PbF2Result r = decide_pb_f2(parse_word(s, 2));
        all = all && r.blocking;
        if (pb2_c.json) {
          json j{{"input", s}, {"blocking", r.blocking}, {"iterations", r.loop_iterations}};
          if (trace) {
            json t = json::array();
            for (const auto& e : r.trace) {
              t.push_back({{"iteration", e.iteration}, {"step", e.step}, {"word", e.word}, {"note", e.note}});
            }
            j["trace"] = t;
          }
          out << j.dump() << '\n';
        } else {
          if (trace) {
            for (const auto& e : r.trace) {
              out << "  [" << e.iteration << "." << e.step << "] " << (e.word.empty() ? "1" : e.word) << "  "
                  << e.note << '\n';
            }
          }
          out << (r.blocking ? "true" : "false") << '\n';
        }
      }
      return bool_exit(all);
    }

    if (blocker->parsed()) {
      check_text_rank(blocker_c.rank);
      const Word w = parse_word(blocker_w, blocker_c.rank);
      const BlockerSpec b = slender ? orbit_blocker_slender(w, blocker_c.rank) : orbit_blocker(w, blocker_c.rank);
      out << spec_json(b).dump() << '\n';
      return kExitTrue;
    }

    if (decide_cmd->parsed() || bench->parsed()) {
      const Common& c = decide_cmd->parsed() ? decide_c : bench_c;
      check_text_rank(c.rank);
      BlockerMode m;
      Strategy st;
      try {
        m = parse_mode(mode);
        st = parse_strategy(strategy);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (scan_budget == 0) throw UsageError("--scan-budget must be positive");
      const FixedTarget t = precompute(parse_word(target, c.rank), c.rank, m);

      if (decide_cmd->parsed()) {
        bool all = true;
        for (const std::string& s : words) {
          const Decision d = decide(t, parse_word(s, c.rank), st, scan_budget);
          all = all && d.answer;
          if (c.json) {
            out << json{{"input", s},
                        {"answer", d.answer},
                        {"route", to_string(d.route)},
                        {"letters", d.letters_examined},
                        {"ns", d.elapsed.count()},
                        {"cyclically_reduced", d.input_cyclically_reduced}}
                       .dump()
                << '\n';
          } else {
            out << (d.answer ? "true" : "false") << ' ' << to_string(d.route) << ' ' << d.letters_examined << ' '
                << d.elapsed.count() << '\n';
          }
        }
        return bool_exit(all);
      }

      const auto rows =
          bench_average_case(t, parse_lengths(lengths), samples, seed ? *seed : default_seed(), st, scan_budget);
      if (csv_path.empty() || csv_path == "-") {
        write_bench_csv(rows, out);
      } else {
        std::ofstream f(csv_path);
        if (!f) throw UsageError("cannot open " + csv_path);
        write_bench_csv(rows, f);
      }
      if (c.json) {
        for (const auto& r : rows) {
          out << json{{"n", r.n},
                      {"samples", r.samples},
                      {"mean_letters", r.mean_letters},
                      {"p95_letters", r.p95_letters},
                      {"mean_ns", r.mean_ns},
                      {"reject_fraction", r.reject_fraction},
                      {"blocker_length", t.blocker.product.size()}}
                         .dump()
              << '\n';
        }
      }
      return kExitTrue;
    }

    if (ball->parsed()) {
      check_text_rank(ball_c.rank);
      const OrbitBall b = orbit_ball(parse_word(oracle_w, ball_c.rank), ball_c.rank, max_len, ball_cap);
      const auto members = b.sorted();
      if (ball_c.json) {
        json ms = json::array();
        for (const auto& z : members) ms.push_back(show(z));
        out << json{{"seed", show(b.seed)},  {"rank", b.rank},         {"radius", b.radius},
                    {"size", members.size()}, {"pruned", b.pruned},   {"bounded", true},
                    {"members", ms}}
                   .dump()
            << '\n';
      } else {
        for (const auto& z : members) out << show(z) << '\n';
      }
      return kExitTrue;
    }

    if (refute->parsed()) {
      check_text_rank(refute_c.rank);
      const auto witness = refute_pb(parse_word(oracle_w, refute_c.rank), refute_c.rank, max_len);
      if (refute_c.json) {
        out << json{{"input", oracle_w},
                    {"radius", max_len},
                    {"witness", witness ? json(show(*witness)) : json(nullptr)}}
                   .dump()
            << '\n';
      } else {
        out << (witness ? show(*witness) : std::string("none")) << '\n';
      }
      return bool_exit(witness.has_value());
    }

    if (verify->parsed()) {
      check_text_rank(verify_c.rank);
      const Word w = parse_word(oracle_w, verify_c.rank);
      const BlockerSpec b = verify_slender ? orbit_blocker_slender(w, verify_c.rank) : orbit_blocker(w, verify_c.rank);
      const OrbitBall ballv = orbit_ball(w, verify_c.rank, max_len, ball_cap);
      const BlockingReport r = verify_orbit_blocking(ballv, b.product);
      const CountingReport cr = max_disjoint_occurrences(ballv, pb_unit(verify_c.rank));
      if (verify_c.json) {
        out << json{{"word", oracle_w},
                    {"blocker", b.product.to_string()},
                    {"passed", r.passed},
                    {"ball_size", r.ball_size},
                    {"pruned", r.pruned},
                    {"counterexample", r.counterexample ? json(show(*r.counterexample)) : json(nullptr)},
                    {"max_unit_count", cr.max_count},
                    {"bound", b.bound}}
                   .dump()
            << '\n';
      } else {
        out << (r.passed ? "pass" : "fail") << " ball=" << r.ball_size << " pruned=" << r.pruned
            << " max_unit_count=" << cr.max_count << " bound=" << b.bound;
        if (r.counterexample) out << " counterexample=" << show(*r.counterexample);
        out << '\n';
      }
      return bool_exit(r.passed);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace fgkit::cli
