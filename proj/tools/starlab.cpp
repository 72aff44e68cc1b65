#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starlab/errors.hpp"
#include "starlab/report.hpp"

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification harness for Salagean-type integral operators"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  starlab::RunConfig cfg;
  std::string json_path;
  std::string csv_path;
  bool timing = false;

  app.add_option("--order", cfg.order, "Truncation order for identity checks")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 16));
  app.add_option("--boundary-order", cfg.boundary_order, "Truncation order for boundary grids")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 16));
  app.add_option("--seed", cfg.seed, "Seed for all random draws");
  app.add_option("--radii", cfg.grid.radii, "Comma-separated grid radii in (0,1)")->delimiter(',');
  app.add_option("--theta", cfg.grid.theta_count, "Angular samples per circle");
  app.add_option("--tol", cfg.tol, "Residual threshold for the structural identities");
  app.add_option("--json", json_path, "Write the JSON reports here instead of stdout");
  app.add_option("--csv", csv_path, "Write dominant-curve rows here instead of stdout");
  app.add_option("--lambda", cfg.lambda, "Order lambda of the input class (lambda0 for dominant-curve)");
  app.add_option("--n-max", cfg.n_max, "Largest Salagean level swept");
  app.add_option("--mu", cfg.mu, "mu of the dominant for dominant-curve");
  app.add_option("--r", cfg.r, "Circle radius for dominant-curve");
  app.add_option("--draws", cfg.draws, "Seeded functions per sweep");
  app.add_option("--k-max", cfg.k_max, "Last index of the two sequences (at most 4)");
  app.add_flag("--extended", cfg.extended, "Add parameter points outside the supported regime");
  app.add_flag("--timing", timing, "Include wall-clock runtime in the JSON reports");

  app.add_subcommand("structural", "Recurrence, ratio relation and m = 1 collapse residuals");
  app.add_subcommand("theorem1", "S_n membership of J_m^j(f) for seeded f in S_n(lambda)");
  app.add_subcommand("theorem2", "Subordination of J_m^beta ratios to the best dominant");
  app.add_subcommand("corollaries", "Sharp constants, order of J, Alexander sharpness witness");
  app.add_subcommand("sequences", "Starlikeness of the two integral sequences for k <= k-max");
  app.add_subcommand("all", "Run every verification command");
  app.add_subcommand("dominant-curve", "Emit theta,re_q,im_q rows of the best dominant");

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    cfg.grid.validate();
    std::vector<starlab::VerificationReport> reports;
    if (command == "dominant-curve") {
      std::string csv;
      reports.push_back(starlab::cmd_dominant_curve(cfg, csv));
      if (csv_path.empty()) {
        std::cout << csv;
      } else if (!write_file(csv_path, csv)) {
        std::cerr << "cannot write " << csv_path << "\n";
        return 2;
      }
    } else if (command == "all") {
      reports = starlab::run_suite({"structural", "theorem1", "theorem2", "corollaries", "sequences"}, cfg);
    } else {
      reports = starlab::run_suite({command}, cfg);
    }

    nlohmann::json out = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
      out.push_back(starlab::to_json(r, timing));
      all_pass = all_pass && r.status == starlab::Status::pass;
      std::fprintf(stderr, "%-14s %-12s %.2f s\n", r.claim.c_str(), starlab::to_string(r.status).c_str(),
                   r.runtime_seconds);
    }
    const std::string text = out.dump(2) + "\n";
    if (!json_path.empty()) {
      if (!write_file(json_path, text)) {
        std::cerr << "cannot write " << json_path << "\n";
        return 2;
      }
    } else if (command != "dominant-curve" || !csv_path.empty()) {
      std::cout << text;
    }
    return all_pass ? 0 : 1;
  } catch (const starlab::MathError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
