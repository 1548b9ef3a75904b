// Command-line front end: single quadratures, parameter sweeps, timing and
// conditioning studies. Every command writes CSV.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "oscillquad/experiments.hpp"

namespace oq = oscillquad;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct Options {
  std::string config;
  std::string out;
  std::string method = "fast";
  int repeats = 5;
  int parallel = 1;
};

template <typename Rows>
void emit(const Options& opt, const Rows& rows) {
  if (opt.out.empty()) {
    oq::write_csv(std::cout, rows);
    return;
  }
  std::ofstream file(opt.out);
  if (!file) throw oq::ConfigError("cannot write " + opt.out);
  oq::write_csv(file, rows);
}

template <typename Rows>
void write_file(const std::filesystem::path& path, const Rows& rows) {
  std::ofstream file(path);
  if (!file) throw oq::ConfigError("cannot write " + path.string());
  oq::write_csv(file, rows);
}

// Per-figure files: error against omega for nu in {4, 64, 128}, error and
// timing against nu, and condition numbers against nu.
void plotdata(const Options& opt, const oq::RunConfig& cfg) {
  const std::filesystem::path dir = opt.out.empty() ? "." : opt.out;
  std::filesystem::create_directories(dir);
  oq::RunConfig omega_cfg = cfg;
  omega_cfg.nu_grid = {4, 64, 128};
  if (!omega_cfg.omega_grid) omega_cfg.omega_grid = oq::OmegaGrid{1.0, 4.0, 13};
  write_file(dir / "omega_sweep.csv", oq::sweep_omega(omega_cfg, oq::Method::fast, opt.parallel));

  oq::RunConfig nu_cfg = cfg;
  if (nu_cfg.nu_grid.empty()) nu_cfg.nu_grid = {8, 16, 32, 64, 128, 256};
  write_file(dir / "error_vs_nu.csv", oq::sweep_nu(nu_cfg, opt.parallel));
  write_file(dir / "time_vs_nu.csv",
             oq::bench(nu_cfg, {oq::Method::fast, oq::Method::dense}, opt.repeats));
  write_file(dir / "condition_vs_nu.csv", oq::condition_study(nu_cfg, opt.parallel));
}

int run(const std::string& command, const Options& opt) {
  const oq::RunConfig cfg = oq::load_run_config(opt.config);
  const oq::Method method = oq::parse_method(opt.method);
  if (opt.repeats < 1) throw oq::ConfigError("--repeats must be >= 1");
  if (opt.parallel < 1) throw oq::ConfigError("--parallel must be >= 1");
  if (command == "quad") {
    emit(opt, std::vector<oq::QuadRow>{oq::run_quad(cfg, method)});
  } else if (command == "sweep-omega") {
    emit(opt, oq::sweep_omega(cfg, method, opt.parallel));
  } else if (command == "sweep-nu") {
    emit(opt, oq::sweep_nu(cfg, opt.parallel));
  } else if (command == "bench") {
    std::vector<oq::Method> methods{oq::Method::fast, oq::Method::dense};
    if (method == oq::Method::dense) methods = {oq::Method::dense};
    if (method == oq::Method::oracle) methods = {oq::Method::oracle};
    emit(opt, oq::bench(cfg, methods, opt.repeats));
  } else if (command == "condition") {
    emit(opt, oq::condition_study(cfg, opt.parallel));
  } else if (command == "plotdata") {
    plotdata(opt, cfg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast Levin-Clenshaw-Curtis quadrature for oscillatory integrals"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"quad", "single quadrature, one CSV row"},
      {"sweep-omega", "error against the oracle over omega_grid"},
      {"sweep-nu", "error and timings over nu_grid"},
      {"bench", "median wall time over nu_grid"},
      {"condition", "condition estimates over nu_grid"},
      {"plotdata", "per-figure CSV files into the --out directory"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config, "JSON run configuration")->required();
    sub->add_option("--out", opt.out, "output CSV path (directory for plotdata)");
    sub->add_option("--method", opt.method, "fast | dense | oracle");
    sub->add_option("--repeats", opt.repeats, "timing repeats");
    sub->add_option("--parallel", opt.parallel, "worker threads for sweeps");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const oq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
}
