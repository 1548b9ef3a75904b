#include "oscillquad/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <mutex>
#include <thread>

#include "oscillquad/condition.hpp"
#include "oscillquad/reference.hpp"

namespace oscillquad {
namespace {

constexpr std::size_t kDefaultOraclePoints = 1000000;

// Runs task(i) for i in [0, count) on up to `workers` threads.
template <typename Task>
void parallel_for(std::size_t count, int workers, Task task) {
  const auto threads = static_cast<std::size_t>(std::clamp(workers, 1, 64));
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void check_nu(int nu) {
  if (nu < 2 || nu % 2 != 0) throw ConfigError("nu must be even and >= 2, got " + std::to_string(nu));
}

std::vector<int> nu_values(const RunConfig& cfg) {
  std::vector<int> out = cfg.nu_grid.empty() ? std::vector<int>{cfg.nu} : cfg.nu_grid;
  for (const int nu : out) check_nu(nu);
  return out;
}

std::vector<double> omega_values(const RunConfig& cfg) {
  if (!cfg.omega_grid) throw ConfigError("this command needs \"omega_grid\"");
  const auto values = cfg.omega_grid->values();
  if (values.empty()) throw ConfigError("omega_grid is empty");
  return values;
}

LevinProblem make_problem(const RunConfig& cfg, const OscillatorSystem& sys, int nu) {
  return LevinProblem{sys, make_named_amplitude(cfg.amplitude, sys, cfg.s), nu, cfg.s};
}

Complex reference_value(const RunConfig& cfg, const OscillatorSystem& sys, const AmplitudeSpec& f) {
  if (auto exact = closed_form_value(cfg.amplitude, sys)) return *exact;
  return oracle_value(sys, f);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "fast") return Method::fast;
  if (name == "dense") return Method::dense;
  if (name == "oracle") return Method::oracle;
  throw ConfigError("unknown method \"" + name + "\"");
}

std::string to_string(Method method) {
  switch (method) {
    case Method::fast: return "fast";
    case Method::dense: return "dense";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

std::size_t oracle_points() {
  const char* env = std::getenv("OSCILLQUAD_ORACLE_POINTS");
  if (env == nullptr || *env == '\0') return kDefaultOraclePoints;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v >= 8.0))
    throw ConfigError("OSCILLQUAD_ORACLE_POINTS must be a number >= 8");
  auto n = static_cast<std::size_t>(std::llround(v));
  return n + n % 2;
}

AmplitudeSpec make_named_amplitude(const std::string& name, const OscillatorSystem& sys, int order) {
  order = std::max(order, 0);
  if (name == "rational_runge") return amplitude_rational_runge(sys.m, order);
  if (name == "one") return amplitude_one(sys.m, order);
  if (name == "cos") return amplitude_cos(sys.m, order);
  const std::string prefix = "manufactured:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ConfigError("manufactured amplitude needs a degree, e.g. manufactured:3");
    const auto n = static_cast<std::size_t>(std::stoi(digits));
    std::vector<ChebCoeffVector> p(static_cast<std::size_t>(sys.m),
                                   ChebCoeffVector{ComplexVector(n + 1, Complex{0.0})});
    p[0].coeffs[n] = 1.0;
    return amplitude_manufactured(sys, p, order);
  }
  throw ConfigError("unknown amplitude \"" + name + "\"");
}

std::optional<Complex> closed_form_value(const std::string& name, const OscillatorSystem& sys) {
  const std::string prefix = "manufactured:";
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  const int n = std::stoi(name.substr(prefix.size()));
  const Complex at_minus = n % 2 == 0 ? 1.0 : -1.0;
  return sys.w_plus[0] - at_minus * sys.w_minus[0];
}

Complex oracle_value(const OscillatorSystem& sys, const AmplitudeSpec& f) {
  try {
    return cc_oracle(levin_integrand(sys, f), oracle_points());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

QuadRow run_quad(const RunConfig& cfg, Method method) {
  check_nu(cfg.nu);
  const OscillatorSystem sys = build_system(cfg.oscillator);
  const LevinProblem problem = make_problem(cfg, sys, cfg.nu);
  QuadRow row{method, sys.omega, cfg.nu, cfg.s, {}, 0.0, 0.0};
  if (method == Method::oracle) {
    const auto start = std::chrono::steady_clock::now();
    row.value = oracle_value(sys, problem.f);
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
  }
  const QuadratureResult result =
      method == Method::dense ? dense_levin_solve(problem) : quadrature(problem);
  row.value = result.value;
  row.residual = result.residual;
  row.wall_seconds = result.wall_time;
  return row;
}

std::vector<OmegaSweepRow> sweep_omega(const RunConfig& cfg, Method method, int parallel) {
  const auto omegas = omega_values(cfg);
  const auto nus = nu_values(cfg);
  std::vector<OmegaSweepRow> rows(omegas.size() * nus.size());
  std::vector<Complex> reference(omegas.size());
  parallel_for(omegas.size(), parallel, [&](std::size_t w) {
    const OscillatorSystem sys = build_system(cfg.oscillator, omegas[w]);
    reference[w] = reference_value(cfg, sys, make_named_amplitude(cfg.amplitude, sys, cfg.s));
  });
  parallel_for(rows.size(), parallel, [&](std::size_t idx) {
    const std::size_t a = idx / omegas.size(), w = idx % omegas.size();
    const OscillatorSystem sys = build_system(cfg.oscillator, omegas[w]);
    const LevinProblem problem = make_problem(cfg, sys, nus[a]);
    Complex value;
    if (method == Method::oracle) value = oracle_value(sys, problem.f);
    else value = (method == Method::dense ? dense_levin_solve(problem) : quadrature(problem)).value;
    rows[idx] = {omegas[w], nus[a], std::abs(value - reference[w])};
  });
  return rows;
}

std::vector<NuSweepRow> sweep_nu(const RunConfig& cfg, int parallel) {
  const auto nus = nu_values(cfg);
  const OscillatorSystem sys = build_system(cfg.oscillator);
  const Complex ref = reference_value(cfg, sys, make_named_amplitude(cfg.amplitude, sys, cfg.s));
  std::vector<NuSweepRow> rows(nus.size());
  parallel_for(nus.size(), parallel, [&](std::size_t a) {
    const LevinProblem problem = make_problem(cfg, sys, nus[a]);
    const QuadratureResult fast = quadrature(problem);
    double dense_wall = std::nan("");
    const auto size = static_cast<std::size_t>(sys.m) * static_cast<std::size_t>(nus[a] + 2 * cfg.s + 2);
    if (size <= kDenseSizeLimit) dense_wall = dense_levin_solve(problem).wall_time;
    rows[a] = {nus[a], std::abs(fast.value - ref), fast.wall_time, dense_wall};
  });
  return rows;
}

std::vector<BenchRow> bench(const RunConfig& cfg, const std::vector<Method>& methods, int repeats) {
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  const auto nus = nu_values(cfg);
  const OscillatorSystem sys = build_system(cfg.oscillator);
  std::vector<BenchRow> rows;
  for (const int nu : nus) {
    const LevinProblem problem = make_problem(cfg, sys, nu);
    for (const Method method : methods) {
      if (method == Method::oracle) throw ConfigError("bench supports fast and dense only");
      std::vector<double> times;
      for (int r = 0; r < repeats; ++r) {
        const QuadratureResult res =
            method == Method::dense ? dense_levin_solve(problem) : solve_fast(problem);
        times.push_back(res.wall_time);
      }
      rows.push_back({nu, method, median(times)});
    }
  }
  return rows;
}

ConditionRow condition_row(const OscillatorSystem& sys, int nu) {
  const LevinCollocation solver(sys, nu, 0);
  ConditionRow row;
  row.nu = nu;
  row.cond_full = condition_estimate_1(dense_collocation_matrix(sys, nu, 0));
  row.cond_banded = condition_estimate_1(solver.middle_matrix());
  row.cond_border = condition_estimate_1(solver.bordering_matrix());
  return row;
}

std::vector<ConditionRow> condition_study(const RunConfig& cfg, int parallel) {
  const auto nus = nu_values(cfg);
  const OscillatorSystem sys = build_system(cfg.oscillator);
  std::vector<ConditionRow> rows(nus.size());
  parallel_for(nus.size(), parallel, [&](std::size_t a) { rows[a] = condition_row(sys, nus[a]); });
  return rows;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<QuadRow>& rows) {
  out << "method,omega,nu,s,value_re,value_im,residual,wall_seconds\n";
  for (const auto& r : rows)
    out << to_string(r.method) << ',' << format_number(r.omega) << ',' << r.nu << ',' << r.s << ','
        << format_number(r.value.real()) << ',' << format_number(r.value.imag()) << ','
        << format_number(r.residual) << ',' << format_number(r.wall_seconds) << '\n';
}

void write_csv(std::ostream& out, const std::vector<OmegaSweepRow>& rows) {
  out << "omega,nu,abs_error\n";
  for (const auto& r : rows)
    out << format_number(r.omega) << ',' << r.nu << ',' << format_number(r.abs_error) << '\n';
}

void write_csv(std::ostream& out, const std::vector<NuSweepRow>& rows) {
  out << "nu,abs_error,wall_seconds_fast,wall_seconds_dense\n";
  for (const auto& r : rows)
    out << r.nu << ',' << format_number(r.abs_error) << ',' << format_number(r.wall_seconds_fast)
        << ',' << format_number(r.wall_seconds_dense) << '\n';
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "nu,method,wall_seconds\n";
  for (const auto& r : rows)
    out << r.nu << ',' << to_string(r.method) << ',' << format_number(r.wall_seconds) << '\n';
}

void write_csv(std::ostream& out, const std::vector<ConditionRow>& rows) {
  out << "nu,cond_full,cond_banded,cond_border\n";
  for (const auto& r : rows)
    out << r.nu << ',' << format_number(r.cond_full) << ',' << format_number(r.cond_banded) << ','
        << format_number(r.cond_border) << '\n';
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_slope: need >= 2 points");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace oscillquad
