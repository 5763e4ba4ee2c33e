#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcoalg/cli.hpp"
#include "mutations.hpp"

namespace fs = std::filesystem;

TEST_CASE("every mutant is rejected with a counterexample") {
  auto suite = mutation::suite();
  CHECK(suite.size() >= 20);
  fs::path dir = fs::path(LCOALG_TEST_TMP) / "mutants";
  fs::create_directories(dir);
  std::size_t i = 0;
  for (const auto& m : suite) {
    fs::path file = dir / ("m" + std::to_string(i) + ".coalg");
    fs::path report = dir / ("m" + std::to_string(i) + ".json");
    ++i;
    std::ofstream(file) << m.text;
    std::ostringstream out, err;
    int code = lcoalg::cli::run({"verify", "--coalgebra", file.string(), "--report", report.string()}, out, err);
    CHECK_MESSAGE(code == 1, m.name);
    std::ifstream in(report);
    lcoalg::Json j = lcoalg::Json::parse(in);
    bool found = false;
    for (const auto& r : j["reports"]) {
      if (!r["verdict"].get<bool>()) {
        found = r.contains("counterexample") && !r["counterexample"]["at"].get<std::string>().empty();
        break;
      }
    }
    CHECK_MESSAGE(found, m.name);
  }
}
