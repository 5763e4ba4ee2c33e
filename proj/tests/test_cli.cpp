#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lcoalg/cli.hpp"
#include "lcoalg/coalgebra_io.hpp"
#include "lcoalg/report.hpp"
#include "lcoalg/tiling.hpp"

namespace fs = std::filesystem;
using lcoalg::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lcoalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const char* name) { return (fs::path(LCOALG_DATA_DIR) / name).string(); }

fs::path tmp(const std::string& name) {
  fs::path dir = fs::path(LCOALG_TEST_TMP) / "cli";
  fs::create_directories(dir);
  return dir / name;
}

void collect(const Json& r, std::set<std::string>& names) {
  if (r.contains("check")) names.insert(r["check"].get<std::string>());
  if (r.contains("parts"))
    for (const auto& p : r["parts"]) collect(p, names);
}

}  // namespace

TEST_CASE("documented exit codes") {
  Result tile = run({"tile", "--n", "2"});
  CHECK(tile.code == 0);
  Json j = Json::parse(tile.out);
  CHECK(j["schema"] == "lcoalg-report/1");
  CHECK(j["reports"][0]["arrow_counts"] == Json::array({8, 8}));
  CHECK(j["verdict"] == true);

  Result mutated = run({"verify", "--coalgebra", data("f_mutated.coalg")});
  CHECK(mutated.code == 1);
  CHECK(Json::parse(mutated.out)["verdict"] == false);

  Result dot = run({"debruijn", "--p", "2", "--n", "1", "--dot"});
  CHECK(dot.code == 0);
  std::size_t edges = 0;
  for (std::size_t pos = dot.out.find("->"); pos != std::string::npos; pos = dot.out.find("->", pos + 1)) ++edges;
  CHECK(edges == 4);

  CHECK(run({"verify", "--coalgebra", data("f.coalg")}).code == 0);
  CHECK(run({"verify", "--coalgebra", data("f.coalg"), "--check", "codialgebra"}).code == 1);
  CHECK(run({"dialg", "--builtin", "f"}).code == 2);
  CHECK(run({"tile"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--coalgebra", "/nonexistent/file.coalg"}).code == 2);
  CHECK(run({"tile", "--n", "9"}).code == 2);
  CHECK(run({"verify", "--builtin", "markov:x:1"}).code == 2);
  CHECK(run({"tile", "--help"}).code == 0);

  fs::path broken = tmp("broken.coalg");
  std::ofstream(broken) << "basis: a\nright: a -> 1*a(x)q\n";
  Result parse = run({"verify", "--coalgebra", broken.string()});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("golden coalgebra files") {
  CHECK(slurp(data("f.coalg")) == lcoalg::render_coalgebra(lcoalg::f_coalgebra()));
  for (const char* name : {"f.coalg", "f_mutated.coalg", "f_coderivation.coalg"}) {
    std::string text = slurp(data(name));
    auto file = lcoalg::parse_coalgebra_file(text);
    CHECK(lcoalg::render_coalgebra(file.coalgebra, file.coderivation) == text);
  }
  CHECK(run({"verify", "--coalgebra", data("f_coderivation.coalg"), "--check", "coderivation"}).code == 0);
  CHECK(run({"debruijn", "--p", "2", "--n", "1"}).out == slurp(data("debruijn_2_1.graph")));
}

TEST_CASE("outputs are byte-deterministic") {
  for (int round = 0; round < 2; ++round) {
    std::string r = std::to_string(round);
    CHECK(run({"tile", "--n", "3", "--report", tmp("tile" + r + ".json").string(), "--dot-dir",
               tmp("dots" + r).string()})
              .code == 0);
  }
  CHECK(slurp(tmp("tile0.json")) == slurp(tmp("tile1.json")));
  for (const char* f : {"support_0.dot", "support_1.dot", "support_2.dot", "glued.dot"}) {
    CHECK(fs::exists(tmp("dots0") / f));
    CHECK(slurp(tmp("dots0") / f) == slurp(tmp("dots1") / f));
  }
  std::vector<std::string> dialg{"dialg", "--builtin", "markov:2:1", "--samples", "20", "--seed", "3"};
  CHECK(run(dialg).out == run(dialg).out);
  std::vector<std::string> other = dialg;
  other.back() = "4";
  CHECK(run(dialg).out != run(other).out);
}

TEST_CASE("every verifier is reachable from the command line") {
  fs::path gl = tmp("grouplike.coalg");
  std::ofstream(gl) << "basis: e g h\nright: e -> 1*e(x)e\nright: g -> 1*g(x)g\nright: h -> 1*h(x)h\n";
  std::vector<std::vector<std::string>> invocations{
      {"debruijn", "--p", "2", "--n", "1"},
      {"line-extend", "--p", "2", "--n", "1"},
      {"markov", "--p", "2", "--n", "1"},
      {"verify", "--builtin", "f", "--check", "coassoc,entangle,chirality,codialgebra,counit,cocomm,kernel,lift"},
      {"verify", "--coalgebra", data("f_coderivation.coalg"), "--check", "coderivation"},
      {"verify", "--coalgebra", gl.string(), "--check", "grouplike", "--grouplike", "e"},
      {"verify", "--builtin", "markov:2:1", "--check", "tensor", "--with", gl.string()},
      {"verify", "--family", "2"},
      {"tile", "--n", "2"},
      {"dialg", "--builtin", "markov:2:1", "--samples", "2"},
      {"dialg", "--n", "2", "--action", "--check", "hypercube,sum", "--samples", "2"},
      {"qcheck"},
      {"reconstruct", "--which", "bracket,delta0,shift-forms"},
  };
  std::set<std::string> commands, checks;
  for (auto args : invocations) {
    commands.insert(args[0]);
    fs::path report = tmp("cov.json");
    args.push_back("--report");
    args.push_back(report.string());
    Result r = run(args);
    CHECK_MESSAGE(r.code <= 1, args[0] << ": " << r.err);
    Json j = Json::parse(slurp(report));
    for (const auto& rep : j["reports"]) collect(rep, checks);
  }
  auto names = lcoalg::cli::command_names();
  CHECK(commands == std::set<std::string>(names.begin(), names.end()));
  for (const char* c :
       {"coassoc-right", "coassoc-left", "entanglement", "chirality", "codialgebra", "counit-right", "counit-left",
        "l-cocommutative", "cocommutator-kernel", "degree-lift", "coderivation-right", "coderivation-left",
        "family-entanglement", "counit", "shift-forms", "tiling", "matrix-action", "dialgebra", "leibniz", "hypercube",
        "sum-associative", "eta-relations", "slq2-left-antipode", "hopf-f", "chiral-xpg", "suq2-left",
        "bracket-reconstruction", "reconstruct-delta0", "isomorphic-to-debruijn", "graph"}) {
    CHECK_MESSAGE(checks.count(c), c);
  }
}
