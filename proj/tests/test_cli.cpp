#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "palinprime/cli.hpp"

using namespace palinprime;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("constants") {
  const auto r = invoke({"constants", "--base", "10"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"][0]["rho"] == "100/81");
  CHECK(j["rows"][0]["thm1"].get<double>() == doctest::Approx(0.667135365546).epsilon(1e-12));
  CHECK(j["rows"][0]["thm2"].get<double>() == doctest::Approx(0.957801814119).epsilon(1e-12));
}

TEST_CASE("coprime json") {
  const auto r = invoke({"coprime", "--base", "2", "--half-length", "1", "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto row = nlohmann::json::parse(r.out)["rows"][0];
  CHECK(row["total"] == 2);
  CHECK(row["universe"] == 4);
}

TEST_CASE("enumerate csv") {
  const auto r = invoke({"enumerate", "--base", "10", "--length", "3", "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 91);
  CHECK(ls[1].find("101") != std::string::npos);
  CHECK(ls.back().find("999") != std::string::npos);
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("every subcommand produces a report") {
  const std::vector<std::vector<std::string>> runs{
      {"census", "-g", "10", "-L", "5"},
      {"ap", "-g", "10", "-L", "3", "-q", "11"},
      {"ap", "-g", "10", "-L", "5", "-q", "7", "-a", "3", "-k", "1"},
      {"lemma34-audit", "-g", "10", "--max-count", "1000"},
      {"bt-audit", "-g", "10", "--max-length", "3", "--max-modulus", "50", "--samples", "4"},
      {"lemma33-audit", "-g", "2", "--max-half-length", "3", "--samples", "20"},
      {"lemma33-audit", "-g", "10", "-N", "1", "--alpha", "0.3"},
      {"coprime", "-g", "10", "-N", "1", "--brute"},
      {"pstar", "-g", "10", "--x", "100", "--list", "--pairs"},
      {"convergence", "-g", "2", "--scales", "1", "2", "3"},
      {"convergence", "-g", "10", "--mode", "pstar", "--scales", "100", "1000"},
      {"bv", "-g", "2", "-N", "2", "-Q", "20"},
      {"farey", "-g", "2", "-N", "2", "-Q", "20"},
  };
  for (const auto& args : runs) {
    for (const char* fmt : {"csv", "json"}) {
      auto a = args;
      a.insert(a.end(), {"--format", fmt});
      const auto r = invoke(a);
      INFO(args[0]);
      CHECK(r.code == cli::kExitOk);
      CHECK(!r.out.empty());
      if (std::string(fmt) == "json") CHECK_NOTHROW(nlohmann::json::parse(r.out));
    }
  }
}

TEST_CASE("pstar list") {
  const auto r = invoke({"pstar", "-g", "10", "--x", "100", "--list", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[1] == "1");
  CHECK(ls[2] == "7");
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"census", "--base", "10"}).code == cli::kExitUsage);
  CHECK(invoke({"census", "--base", "10", "-L", "3", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(invoke({"census", "--base", "1", "-L", "3"}).code == cli::kExitDomain);
  CHECK(invoke({"ap", "-g", "10", "-L", "3", "-q", "0"}).code == cli::kExitDomain);
  CHECK(invoke({"enumerate", "-g", "10", "-L", "17"}).code == cli::kExitBudget);
  CHECK(invoke({"coprime", "-g", "10", "-N", "5", "--brute"}).code == cli::kExitBudget);
}

TEST_CASE("budget environment override") {
  ::setenv("PALINPRIME_BUDGET", "50", 1);
  CHECK(invoke({"enumerate", "-g", "10", "-L", "3"}).code == cli::kExitBudget);
  ::setenv("PALINPRIME_BUDGET", "90", 1);
  CHECK(invoke({"enumerate", "-g", "10", "-L", "3"}).code == cli::kExitOk);
  ::setenv("PALINPRIME_BUDGET", "lots", 1);
  CHECK(invoke({"enumerate", "-g", "10", "-L", "3"}).code == cli::kExitDomain);
  ::unsetenv("PALINPRIME_BUDGET");
}

TEST_CASE("--out and --svg write files") {
  const auto dir = std::filesystem::temp_directory_path() / "palinprime_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "conv.csv").string(), svg = (dir / "conv.svg").string();
  const auto r = invoke({"convergence", "-g", "2", "--scales", "1", "2", "--format", "csv", "--out", csv, "--svg", svg});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(csv);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().starts_with("scale,"));
  CHECK(std::filesystem::file_size(svg) > 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output does not depend on the thread count") {
  const std::vector<std::vector<std::string>> runs{
      {"coprime", "-g", "2", "-N", "6"},
      {"lemma34-audit", "-g", "3", "--max-count", "20000"},
      {"lemma33-audit", "-g", "3", "--max-half-length", "4", "--samples", "50", "--seed", "9"},
      {"bt-audit", "-g", "3", "--max-length", "5", "--max-modulus", "100"},
      {"bv", "-g", "2", "-N", "3", "-Q", "30"},
  };
  for (const auto& args : runs) {
    std::string first;
    for (const char* t : {"1", "3", "8"}) {
      auto a = args;
      a.insert(a.end(), {"--threads", t, "--format", "csv"});
      const auto r = invoke(a);
      REQUIRE(r.code == 0);
      if (first.empty()) first = r.out;
      CHECK(r.out == first);
    }
  }
}
