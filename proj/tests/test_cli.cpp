#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dx/cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dx::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return std::string(DX_DATA_DIR) + "/" + f; }

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string tmp_report(const std::string& tag) {
  return (std::filesystem::temp_directory_path() / ("dxw_test_" + tag + ".json")).string();
}

}  // namespace

TEST_CASE("ind lists the window") {
  Run r = run({"ind", "--quiver", data("a2.qv"), "--d", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> names;
  for (const auto& o : j["objects"]) names.push_back(o["name"]);
  CHECK(names == std::vector<std::string>{"P2", "P1", "I1", "P2@1", "P1@1", "I1@1"});
  Run r1 = run({"ind", "--quiver", data("a2.qv"), "--d", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(r1.out)["objects"].size() == 3);
  Run tab = run({"ind", "--quiver", data("a2.qv"), "--d", "2"});
  CHECK(tab.code == 0);
  CHECK(tab.out.find("dim Ext^1") != std::string::npos);
}

TEST_CASE("representation-infinite quivers are out of scope") {
  Run r = run({"ind", "--quiver", data("kronecker.qv"), "--d", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("representation-infinite") != std::string::npos);
  Run e = run({"ind", "--quiver", data("kronecker.qv"), "--experimental-window", "--knit-cap", "6"});
  CHECK(e.code == 0);
  CHECK(e.out.find("partial") != std::string::npos);
  CHECK(run({"smc", "--quiver", data("a2.qv"), "--experimental-window"}).code == 2);
}

TEST_CASE("silting subcommands") {
  Run e = run({"silting", "enumerate", "--quiver", data("a2.qv"), "--d", "2", "--format", "json"});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out).size() == 12);
  Run q = run({"silting", "qseq", "--quiver", data("a2.qv"), "--d", "2", "--object", "P2@2,I1@1"});
  REQUIRE(q.code == 0);
  CHECK(q.out.find("Q0 = 0 ") != std::string::npos);
  CHECK(q.out.find("Q1 = I1@1 ") != std::string::npos);
  CHECK(q.out.find("Q2 = P2@2^2 ") != std::string::npos);
  CHECK(q.out.find("I1@1: left yes, right yes") != std::string::npos);
  CHECK(q.out.find("P2@2: left no, right yes") != std::string::npos);
  Run m = run({"silting", "mutate", "--quiver", data("a2.qv"), "--d", "2", "--object", "P2,P1", "--at", "P2", "--dir",
               "left"});
  CHECK(m.code == 0);
  CHECK(m.out == "I1,P1\n");
  Run x = run({"silting", "mutate", "--quiver", data("a2.qv"), "--d", "2", "--object", "P2@2,I1@1", "--at", "P2@2"});
  CHECK(x.code == 0);
  CHECK(x.out.find("does not exist") != std::string::npos);
  Run p = run({"silting", "poset", "--quiver", data("a2.qv"), "--d", "2", "--format", "dot"});
  CHECK(p.code == 0);
  CHECK(p.out.find("digraph") == 0);
}

TEST_CASE("input errors exit with 3") {
  CHECK(run({"ind", "--quiver", data("missing.qv")}).code == 3);
  CHECK(run({"ind", "--quiver", data("a2.qv"), "--d", "0"}).code == 3);
  CHECK(run({"ind", "--quiver", data("a2.qv"), "--format", "xml"}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"silting", "qseq", "--quiver", data("a2.qv"), "--d", "2", "--object", "P2,I1"}).code == 3);
  CHECK(run({"silting", "qseq", "--quiver", data("a2.qv"), "--object", "Q9"}).code == 3);
  CHECK(run({"silting", "mutate", "--quiver", data("a2.qv"), "--object", "P2,P1", "--at", "I1"}).code == 3);
  CHECK(run({"verify", "--quiver", data("a2.qv"), "--suite", "bogus", "--report", tmp_report("bogus")}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("builtin linear quivers") {
  Run r = run({"silting", "enumerate", "--quiver", "A3", "--d", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 14);
}

TEST_CASE("smc, semibricks and ledger") {
  Run s = run({"smc", "--quiver", data("a2.qv"), "--d", "2"});
  CHECK(s.code == 0);
  CHECK(count_lines(s.out) == 12);
  Run b = run({"semibricks", "--quiver", data("a2.qv"), "--d", "2"});
  CHECK(b.code == 0);
  CHECK(b.out.find("12 semibricks") != std::string::npos);
  Run l = run({"ledger", "--quiver", data("a2.qv"), "--d", "2", "--format", "dot"});
  CHECK(l.code == 0);
  std::size_t nodes = 0;
  for (std::size_t p = 0; (p = l.out.find("[label=", p)) != std::string::npos; ++p) ++nodes;
  CHECK(nodes == 12);
  Run lj = run({"ledger", "--quiver", data("a2.qv"), "--d", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(lj.out)["rows"].size() == 5);
}

TEST_CASE("verify writes a report") {
  const std::string rep = tmp_report("q");
  Run r = run({"verify", "--suite", "q-criterion", "--quiver", data("a2.qv"), "--d", "1", "--report", rep});
  CHECK(r.code == 0);
  std::ifstream in(rep);
  REQUIRE(in);
  auto j = nlohmann::json::parse(in);
  CHECK(j["status"] == "pass");
  CHECK(j["d"] == 1);
  std::size_t crit = 0;
  for (const auto& c : j["suites"][0]["checks"])
    if (c["check"] == "mutation-criterion") {
      ++crit;
      CHECK(c["status"] == "pass");
    }
  CHECK(crit == 5 * 2 * 2);
  std::filesystem::remove(rep);
}

TEST_CASE("identical configuration gives identical JSON") {
  const std::vector<std::string> a = {"verify", "--suite", "all", "--quiver", data("a2.qv"), "--d", "2",
                                      "--seed", "7", "--format", "json", "--report", tmp_report("det1")};
  auto b = a;
  b.back() = tmp_report("det2");
  Run r1 = run(a), r2 = run(b);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  CHECK(slurp(tmp_report("det1")) == slurp(tmp_report("det2")));
  std::filesystem::remove(tmp_report("det1"));
  std::filesystem::remove(tmp_report("det2"));
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = DXW_BIN;
  auto code = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  CHECK(code("ind --quiver " + data("a2.qv") + " --d 2") == 0);
  CHECK(code("ind --quiver " + data("kronecker.qv") + " --d 2") == 2);
  CHECK(code("ind --quiver " + data("nope.qv")) == 3);
}
