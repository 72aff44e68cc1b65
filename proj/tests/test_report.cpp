#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "starlab/report.hpp"
#include "support.hpp"

using namespace starlab;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.order = 128;
  cfg.boundary_order = 512;
  cfg.grid.radii = {0.5, 0.9};
  cfg.grid.theta_count = 128;
  cfg.draws = 3;
  cfg.n_max = 1;
  cfg.k_max = 1;
  return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("report serialization") {
  VerificationReport r{"theorem1", {{"seed", 42}}, Status::fail, {{"min_margin", -0.5}}, 1.25};
  const auto j = to_json(r);
  CHECK(j.at("claim") == "theorem1");
  CHECK(j.at("status") == "fail");
  CHECK(j.at("parameters").at("seed") == 42);
  CHECK(j.at("payload").at("min_margin") == -0.5);
  CHECK_FALSE(j.contains("runtime_seconds"));
  CHECK(to_json(r, true).at("runtime_seconds") == 1.25);
  CHECK(to_string(Status::pass) == "pass");
  CHECK(to_string(Status::inconclusive) == "inconclusive");
}

TEST_CASE("every report records order, grid, seed and tolerance") {
  const auto cfg = small_config();
  const auto rep = cmd_structural(cfg);
  CHECK(rep.status == Status::pass);
  for (const char* key : {"order", "boundary_order", "seed", "grid", "tol"}) CHECK(rep.parameters.contains(key));
  CHECK(rep.parameters.at("grid").at("theta_count") == 128);
}

TEST_CASE("structural residual threshold decides the status") {
  auto cfg = small_config();
  cfg.tol = 1e-30;
  CHECK(cmd_structural(cfg).status == Status::fail);
}

TEST_CASE("theorem claims are gated on the structural check") {
  auto cfg = small_config();
  cfg.tol = 1e-30;
  const auto reports = run_suite({"theorem1", "sequences"}, cfg);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].claim == "structural");
  CHECK(reports[0].status == Status::fail);
  for (std::size_t i = 1; i < 3; ++i) {
    CHECK(reports[i].status == Status::inconclusive);
    CHECK(reports[i].payload.at("reason") == "structural check failed");
  }
  CHECK(testing::error_of([&] { return run_suite({"theorem9"}, cfg); }) == Errc::invalid_argument);
}

TEST_CASE("small theorem runs pass") {
  const auto cfg = small_config();
  const auto reports = run_suite({"structural", "theorem1", "sequences"}, cfg);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    INFO(r.claim);
    CHECK(r.status == Status::pass);
  }
  CHECK(reports[1].payload.at("min_margin").get<double>() >= -1e-2);
}

TEST_CASE("dominant curve rows") {
  RunConfig cfg;
  cfg.mu = 0.0;
  cfg.lambda = 0.0;
  cfg.r = 0.9;
  std::string csv;
  const auto rep = cmd_dominant_curve(cfg, csv);
  CHECK(rep.status == Status::pass);
  const auto lines = lines_of(csv);
  REQUIRE(lines.size() == 4098);
  CHECK(lines.front() == "theta,re_q,im_q");
  CHECK(lines[1].substr(0, 2) == "0,");
  const auto values = [](const std::string& line) { return line.substr(line.find(',')); };
  CHECK(values(lines[1]) == values(lines.back()));
  CHECK(rep.payload.at("rows") == 4097);
  CHECK(std::abs(rep.payload.at("min_re").get<double>() - 1.0 / 1.9) < 1e-15);
  CHECK(rep.payload.at("simple_curve") == true);
  CHECK(rep.parameters.at("univalence_of_q") == "assumed");
}

TEST_CASE("identical configs give identical reports") {
  const auto cfg = small_config();
  const auto dump = [&] {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : run_suite({"structural", "theorem1"}, cfg)) all.push_back(to_json(r));
    return all.dump();
  };
  CHECK(dump() == dump());

  auto other = cfg;
  other.seed = 43;
  nlohmann::json a = to_json(cmd_theorem1(cfg));
  nlohmann::json b = to_json(cmd_theorem1(other));
  CHECK(a.dump() != b.dump());
}
