#include "susymod/cli.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace susymod;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ordered_json strip_time(ordered_json j) {
  j.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST_CASE("RunConfig validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.margin = 16;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.beta = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.na_cut = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("config errors exit with 2") {
  CHECK(run({"--margin", "20", "--nmax", "16", "verify"}).code == kExitConfigError);
  CHECK(run({"spectrum", "--model", "graphene"}).code == kExitConfigError);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitConfigError);
  CHECK(run({"--beta", "-1", "verify", "--suite", "modular"}).code == kExitConfigError);
  CHECK(run({"--na", "8", "--nb", "10", "verify", "--suite", "modular"}).code == kExitConfigError);
  CHECK(run({"--format", "xml", "verify"}).code == kExitConfigError);
  CHECK(run({"--nmax", "8", "spectrum", "--model", "landau-a", "--levels", "6"}).code ==
        kExitConfigError);
  CHECK(run({"concurrence", "--k", "2", "--alpha-re", "0.9", "--beta-re", "0.9"}).code ==
        kExitConfigError);
  CHECK(run({"--bogus"}).code == kExitConfigError);
  const Run r = run({"--margin", "20", "--nmax", "16", "verify"});
  CHECK(r.err.find("margin") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("passing suites exit 0") {
  const Run ns = run({"--nmax", "10", "verify", "--suite", "nonlinear-susy"});
  CHECK(ns.code == kExitOk);
  const ordered_json j = ordered_json::parse(ns.out);
  CHECK(j["suite"] == "nonlinear-susy");
  CHECK(j["overall_pass"] == true);
  CHECK(j["config"]["na_cut"] == 10);
  CHECK(run({"--nmax", "10", "verify", "--suite", "jc-mapping"}).code == kExitOk);
}

TEST_CASE("modular suite at nmax 8, beta 0.2: Delta Omega stays under its tail-scaled tolerance") {
  // ‖ΔΩ − Ω‖ = sqrt(((e^β − 1)² + (e^{−β} − 1)²)/2) ≈ 0.2019 at β = 0.2, while
  // the tolerance max(1e−10, 10·e^{−β·8}) ≈ 2.019 is looser.
  const Run r = run({"--nmax", "8", "--beta", "0.2", "verify", "--suite", "modular"});
  CHECK(r.code == kExitOk);
  const ordered_json j = ordered_json::parse(r.out);
  const double beta = 0.2;
  const double expected =
      std::sqrt((std::pow(std::exp(beta) - 1.0, 2) + std::pow(std::exp(-beta) - 1.0, 2)) / 2.0);
  bool found = false;
  for (const auto& e : j["entries"]) {
    if (e["check_id"] == "modular.delta_omega_eq_omega") {
      found = true;
      CHECK(e["pass"] == true);
      CHECK(e["residual"].get<double>() == doctest::Approx(expected).epsilon(1e-12));
      CHECK(e["tolerance"].get<double>() == doctest::Approx(10.0 * std::exp(-beta * 8)));
    }
  }
  CHECK(found);
}

TEST_CASE("full suite exits 1 and names each failing check on stderr") {
  const Run r = run({"--nmax", "8", "verify", "--suite", "all"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.err.find("FAILED modular.delta_omega_eq_omega") != std::string::npos);
  CHECK(r.err.find("FAILED susy.ab.anticomm_qa_qb") != std::string::npos);
  CHECK(r.err.find("FAILED susy.ab.anticomm_qadag_qbdag") != std::string::npos);
  CHECK(ordered_json::parse(r.out)["overall_pass"] == false);
}

TEST_CASE("verify output is deterministic apart from wall time") {
  const std::vector<std::string> args = {"--nmax", "8", "--seed", "7", "verify", "--suite", "all"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == b.code);
  CHECK(strip_time(ordered_json::parse(a.out)) == strip_time(ordered_json::parse(b.out)));
  CHECK(a.err == b.err);
}

TEST_CASE("csv and table formats") {
  const Run csv = run({"--nmax", "8", "--format", "csv", "verify", "--suite", "jc-mapping"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("check_id,paper_anchor,residual,tolerance,pass\n", 0) == 0);
  const Run table = run({"--nmax", "8", "--format", "table", "verify", "--suite", "jc-mapping"});
  CHECK(table.out.find("jc.j_hjc_j_eq_hajc") != std::string::npos);
}

TEST_CASE("spectrum: closed form against numeric") {
  for (const char* model : {"landau-a", "landau-b", "dirac", "jc", "ajc"}) {
    const Run r = run({"spectrum", "--model", model, "--levels", "6"});
    CAPTURE(model);
    REQUIRE(r.code == kExitOk);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["model"] == model);
    CHECK(!j["rows"].empty());
    for (const auto& row : j["rows"]) CHECK(row["abs_diff"].get<double>() < 1e-9);
  }
  const Run jc = run({"--g", "0.1", "spectrum", "--model", "jc", "--levels", "4"});
  const ordered_json j = ordered_json::parse(jc.out);
  std::vector<double> closed;
  for (const auto& row : j["rows"]) {
    if (row["level"] == 4) closed.push_back(row["closed_form"].get<double>());
  }
  std::sort(closed.begin(), closed.end());
  REQUIRE(closed.size() == 2);
  CHECK(closed[0] == doctest::Approx(3.3));
  CHECK(closed[1] == doctest::Approx(3.7));
}

TEST_CASE("concurrence subcommand") {
  const Run r = run({"concurrence", "--k", "3", "--alpha-re", "0.6", "--beta-im", "0.8"});
  REQUIRE(r.code == kExitOk);
  const ordered_json j = ordered_json::parse(r.out);
  CHECK(j["concurrence_modular"].get<double>() == doctest::Approx(0.96).epsilon(1e-14));
  CHECK(j["concurrence_wootters"].get<double>() == doctest::Approx(0.96).epsilon(1e-12));
  CHECK(j["formation_entropy"].get<double>() == doctest::Approx(0.9426831892554922).epsilon(1e-12));
  CHECK(j["agreement"] == true);

  const Run csv = run({"--format", "csv", "concurrence", "--k", "1", "--alpha-re", "0.7071067811865476",
                       "--beta-re", "0.7071067811865476"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.find("true") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const Run r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verify") != std::string::npos);
}
