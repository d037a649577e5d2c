#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fgkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fgkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word commands") {
  auto r = run({"reduce", "abBAba", "aA"});
  CHECK(r.code == 0);
  CHECK(r.out == "ba\n1\n");

  r = run({"cyclic", "abA", "ba"});
  CHECK(r.out == "b\nab\n");

  r = run({"minimize", "ABab", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 4);

  r = run({"graph", "ab"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graph") != std::string::npos);
}

TEST_CASE("boolean commands use the exit code") {
  CHECK(run({"pb2", "Aba"}).out == "true\n");
  CHECK(run({"pb2", "Aba"}).code == 0);
  CHECK(run({"pb2", "ab"}).code == 1);
  CHECK(run({"primitive", "cb", "--rank", "3"}).out == "true\n");
  CHECK(run({"primitive", "ABab"}).code == 1);
  CHECK(run({"orbit", "a", "abA"}).code == 0);
  CHECK(run({"orbit", "a", "ABab"}).code == 1);

  const auto t = run({"pb2", "aabb", "--trace"});
  CHECK(t.out.find("[0.1]") != std::string::npos);
}

TEST_CASE("blocker JSON") {
  const auto r = run({"blocker", "ab", "--rank", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 15);
  CHECK(j["product"] == "aabbaaabbaaabba");
  CHECK(j["ell_or_k"] == 2);

  const auto s = nlohmann::json::parse(run({"blocker", "aabbcc", "-r", "3", "--slender"}).out);
  CHECK(s["length"] == 18);
}

TEST_CASE("decide and bench") {
  auto r = run({"decide", "--target", "ab", "aab", "aabbaaabbab"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("true full-algorithm ", 0) == 0);
  CHECK(r.out.find("false scanner-reject") != std::string::npos);

  r = run({"decide", "-t", "ab", "--strategy", "full", "--json", "bbbba"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["route"] == "full-algorithm");

  r = run({"bench", "-t", "ab", "--lengths", "32,64", "--samples", "5", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,samples,mean_letters,p95_letters,mean_ns,reject_fraction\n32,5,", 0) == 0);
}

TEST_CASE("oracle commands") {
  auto r = run({"oracle", "ball", "a", "-L", "1"});
  CHECK(r.out == "a\nA\nb\nB\n");
  r = run({"oracle", "refute-pb", "abc", "--rank", "3", "-L", "6"});
  CHECK(r.code == 0);
  CHECK(r.out != "none\n");
  r = run({"oracle", "refute-pb", "Aba", "-L", "8"});
  CHECK(r.code == 1);
  CHECK(r.out == "none\n");
  r = run({"oracle", "verify-blocker", "ab", "-L", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("pass ball=", 0) == 0);
  CHECK(run({"oracle", "ball", "a", "-L", "9", "--cap", "10"}).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({"reduce", "a1"}).code == 2);
  CHECK(run({"primitive", "c"}).code == 2);
  CHECK(run({"pb2", "ab", "--rank", "3"}).code == 2);
  CHECK(run({"decide", "-t", "ab", "--strategy", "fast", "a"}).code == 2);
  CHECK(run({"bench", "-t", "ab", "--lengths", "3,x"}).code == 2);
  CHECK(run({"primitive", "a", "--rank", "27"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}
