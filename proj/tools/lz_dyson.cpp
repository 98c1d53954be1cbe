// lz-dyson: command-line front end emitting reproducible CSV artifacts for
// the linear-sweep two-level problem: trajectory evolution, survival
// sweeps, time-ordered series terms, series resummation, and the full
// invariant suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lz/dyson.hpp"
#include "lz/errors.hpp"
#include "lz/format.hpp"
#include "lz/model.hpp"
#include "lz/propagator.hpp"
#include "lz/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;

const double kUnset = std::numeric_limits<double>::quiet_NaN();

std::string num(double v) { return lz::format_double_sig(v, 15); }

// Self-describing first line: subcommand plus the effective computation
// parameters, sorted by key so identical runs are byte-identical.
std::string banner(const std::string& subcommand,
                   std::vector<std::pair<std::string, std::string>> flags) {
  std::sort(flags.begin(), flags.end());
  std::string line = "# lz-dyson " + subcommand;
  for (const auto& [k, v] : flags) {
    line += " " + k + "=" + v;
  }
  line += "\n";
  return line;
}

int emit(const std::string& output_path, const std::string& payload) {
  if (output_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return kOk;
  }
  std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "lz-dyson: cannot open output file '" << output_path << "'\n";
    return kUsageError;
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  return out ? kOk : kUsageError;
}

// `key=value` per line, '#' comments.  Values apply only to options the
// command line did not set, so flags override the file.
class ConfigMerge {
 public:
  void bind(CLI::App* sub, const std::string& key,
            std::function<bool(const std::string&)> setter) {
    entries_.push_back({sub, key, std::move(setter)});
  }

  void bind_double(CLI::App* sub, const std::string& key, double* target) {
    bind(sub, key, [target](const std::string& raw) {
      std::size_t used = 0;
      try {
        *target = std::stod(raw, &used);
      } catch (const std::exception&) {
        return false;
      }
      return used == raw.size();
    });
  }

  void bind_int(CLI::App* sub, const std::string& key, int* target) {
    bind(sub, key, [target](const std::string& raw) {
      std::size_t used = 0;
      try {
        *target = std::stoi(raw, &used);
      } catch (const std::exception&) {
        return false;
      }
      return used == raw.size();
    });
  }

  void bind_size(CLI::App* sub, const std::string& key, std::size_t* target) {
    bind(sub, key, [target](const std::string& raw) {
      std::size_t used = 0;
      try {
        const long long v = std::stoll(raw, &used);
        if (v < 0) return false;
        *target = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        return false;
      }
      return used == raw.size();
    });
  }

  void bind_string(CLI::App* sub, const std::string& key, std::string* target) {
    bind(sub, key, [target](const std::string& raw) {
      *target = raw;
      return true;
    });
  }

  void bind_double_list(CLI::App* sub, const std::string& key,
                        std::vector<double>* target) {
    bind(sub, key, [target](const std::string& raw) {
      std::vector<double> values;
      std::stringstream ss(raw);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
          values.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
          return false;
        }
        if (used != item.size()) return false;
      }
      if (values.empty()) return false;
      *target = values;
      return true;
    });
  }

  bool apply(const std::string& path, std::string& error) const {
    std::ifstream in(path);
    if (!in) {
      error = "cannot read config file '" + path + "'";
      return false;
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        error = "config line " + std::to_string(line_no) + ": expected key=value";
        return false;
      }
      std::string key = line.substr(0, eq);
      std::string value = line.substr(eq + 1);
      while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
      const auto vstart = value.find_first_not_of(" \t");
      value = vstart == std::string::npos ? "" : value.substr(vstart);

      const auto entry = std::find_if(entries_.begin(), entries_.end(),
                                      [&key](const auto& e) { return e.key == key; });
      if (entry == entries_.end()) {
        error = "config line " + std::to_string(line_no) + ": unknown key '" + key + "'";
        return false;
      }
      if (entry->sub->count("--" + key) > 0) continue;  // flag wins
      if (!entry->set(value)) {
        error = "config line " + std::to_string(line_no) + ": bad value for '" + key + "'";
        return false;
      }
    }
    return true;
  }

 private:
  struct Entry {
    CLI::App* sub;
    std::string key;
    std::function<bool(const std::string&)> set;
  };
  std::vector<Entry> entries_;
};

lz::Method parse_method(const std::string& name) {
  if (name == "expmid") return lz::Method::ExpMidpoint;
  if (name == "rk4") return lz::Method::RK4;
  throw lz::validation_error("method must be 'expmid' or 'rk4'");
}

// --- evolve ---------------------------------------------------------------

struct EvolveArgs {
  double gamma = kUnset;
  double tau_max = 60.0;
  double step = 2e-3;
  std::string method = "expmid";
  std::string output;
  std::string config;
};

int run_evolve(const EvolveArgs& args) {
  if (std::isnan(args.gamma)) throw lz::validation_error("evolve requires --gamma");
  const lz::Gamma gamma{args.gamma};
  const lz::Method method = parse_method(args.method);
  if (!(args.tau_max > 0.0)) throw lz::validation_error("tau-max must be positive");
  const lz::TimeGrid grid{-args.tau_max, args.tau_max, args.step};

  lz::SpinorState initial;
  const lz::Trajectory traj = lz::evolve(gamma, grid, initial, method);
  if (traj.step_warning) {
    std::cerr << "lz-dyson: warning: step " << num(args.step)
              << " under-resolves the fastest phase in the window\n";
  }

  std::string csv = banner("evolve", {{"gamma", num(args.gamma)},
                                      {"method", args.method},
                                      {"step", num(args.step)},
                                      {"tau-max", num(args.tau_max)}});
  csv += "tau,re_a,im_a,re_b,im_b,norm\n";
  for (const auto& s : traj.samples) {
    csv += num(s.tau) + "," + num(s.a.real()) + "," + num(s.a.imag()) + "," +
           num(s.b.real()) + "," + num(s.b.imag()) + "," + num(s.norm_sq()) + "\n";
  }
  return emit(args.output, csv);
}

// --- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::vector<double> gammas;
  double gamma_min = kUnset;
  double gamma_max = kUnset;
  double gamma_step = 0.1;
  double tau_max = 60.0;
  double step = 2e-3;
  std::string method = "expmid";
  int averaging_periods = 10;
  std::string output;
  std::string config;
};

int run_sweep(const SweepArgs& args) {
  std::vector<double> gammas = args.gammas;
  if (gammas.empty()) {
    if (std::isnan(args.gamma_min) || std::isnan(args.gamma_max)) {
      throw lz::validation_error("sweep needs --gammas or --gamma-min/--gamma-max");
    }
    if (args.gamma_min > args.gamma_max) {
      throw lz::validation_error("empty sweep range: gamma-min exceeds gamma-max");
    }
    if (!(args.gamma_step > 0.0)) {
      throw lz::validation_error("gamma-step must be positive");
    }
    const double span = args.gamma_max - args.gamma_min;
    const auto n = static_cast<std::size_t>(std::floor(span / args.gamma_step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) {
      gammas.push_back(args.gamma_min + args.gamma_step * static_cast<double>(i));
    }
  }
  std::sort(gammas.begin(), gammas.end());

  lz::SurvivalOptions opts;
  opts.step = args.step;
  opts.method = parse_method(args.method);
  opts.averaging_periods = args.averaging_periods;
  const double tau_max = args.tau_max;

  // Validate every point before any work starts.
  std::vector<lz::Gamma> points;
  points.reserve(gammas.size());
  for (const double g : gammas) points.emplace_back(g);
  if (!(tau_max > 0.0)) throw lz::validation_error("tau-max must be positive");
  (void)lz::TimeGrid(-tau_max, tau_max, args.step);
  if (opts.averaging_periods < 1) {
    throw lz::validation_error("averaging-periods must be >= 1");
  }

  // Points are independent; evaluate them concurrently and gather in
  // ascending-gamma order so the artifact is deterministic.
  std::vector<std::future<lz::SurvivalResult>> futures;
  futures.reserve(points.size());
  for (const lz::Gamma& g : points) {
    futures.push_back(std::async(std::launch::async, [g, tau_max, opts] {
      return lz::survival_probability(g, tau_max, opts);
    }));
  }

  std::string csv =
      banner("sweep", {{"averaging-periods", std::to_string(args.averaging_periods)},
                       {"method", args.method},
                       {"step", num(args.step)},
                       {"tau-max", num(args.tau_max)}});
  csv += "gamma,p_numeric,p_analytic,abs_error\n";
  bool any_warning = false;
  for (auto& f : futures) {
    const lz::SurvivalResult r = f.get();
    any_warning = any_warning || r.step_warning;
    csv += num(r.gamma) + "," + num(r.p_numeric) + "," + num(r.p_analytic) + "," +
           num(std::abs(r.p_numeric - r.p_analytic)) + "\n";
  }
  if (any_warning) {
    std::cerr << "lz-dyson: warning: step " << num(args.step)
              << " under-resolves the phase or the averaging window\n";
  }
  return emit(args.output, csv);
}

// --- dyson ----------------------------------------------------------------

struct DysonArgs {
  int order = 1;
  double window = 30.0;
  std::size_t grid = 200000;
  int averaging_windows = 8;
  bool expensive = false;
  std::string output;
  std::string config;
};

int run_dyson(const DysonArgs& args) {
  const int max_order = args.expensive ? 3 : 2;
  if (args.order < 1 || args.order > max_order) {
    throw lz::validation_error("order must be 1 or 2 (3 with --expensive)");
  }
  lz::DysonOptions opts;
  opts.window = args.window;
  opts.grid_points = args.grid;
  opts.averaging_windows = args.averaging_windows;
  const lz::DysonTerm term = lz::dyson_term_numeric(args.order, opts);

  std::string csv =
      banner("dyson", {{"averaging-windows", std::to_string(args.averaging_windows)},
                       {"grid", std::to_string(args.grid)},
                       {"order", std::to_string(args.order)},
                       {"window", num(args.window)}});
  csv += "n,re_numeric,im_numeric,analytic,abs_error\n";
  csv += std::to_string(term.n) + "," + num(term.numeric.real()) + "," +
         num(term.numeric.imag()) + "," + num(term.analytic) + "," +
         num(term.abs_error) + "\n";
  return emit(args.output, csv);
}

// --- series ---------------------------------------------------------------

struct SeriesArgs {
  double gamma = kUnset;
  int order = 25;
  std::string output;
  std::string config;
};

int run_series(const SeriesArgs& args) {
  if (std::isnan(args.gamma)) throw lz::validation_error("series requires --gamma");
  const lz::SeriesSum sum = lz::series_sum(lz::Gamma{args.gamma}, args.order);

  std::string csv = banner("series", {{"gamma", num(args.gamma)},
                                      {"order", std::to_string(args.order)}});
  csv += "k,partial_sum,limit,abs_error\n";
  for (std::size_t k = 0; k < sum.partial_sums.size(); ++k) {
    csv += std::to_string(k) + "," + num(sum.partial_sums[k]) + "," + num(sum.limit) +
           "," + num(std::abs(sum.partial_sums[k] - sum.limit)) + "\n";
  }
  return emit(args.output, csv);
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string only;
  double step = kUnset;
  double epsilon = 1e-3;
  double omega = 1e4;
  std::string output;
  std::string config;
};

int run_verify(const VerifyArgs& args) {
  static const std::vector<std::string> kModules = {
      "core_model", "linalg2", "propagator", "special", "dyson", "analytic"};
  if (!args.only.empty()) {
    const bool known =
        std::any_of(kModules.begin(), kModules.end(), [&](const std::string& m) {
          return args.only.rfind(m, 0) == 0;
        });
    if (!known) throw lz::validation_error("unknown module '" + args.only + "'");
  }
  const bool step_given = !std::isnan(args.step);
  if (step_given && !(args.step > 0.0)) {
    throw lz::validation_error("step must be positive");
  }
  (void)lz::RegularizedTheta(args.epsilon, args.omega);  // validate eagerly

  lz::VerifyOptions opts;
  opts.only = args.only;
  if (step_given) opts.step = args.step;
  opts.epsilon = args.epsilon;
  opts.omega = args.omega;

  const std::vector<lz::CheckResult> results = lz::run_verification(opts);

  std::vector<std::pair<std::string, std::string>> flags;
  flags.push_back({"epsilon", num(args.epsilon)});
  flags.push_back({"omega", num(args.omega)});
  if (!args.only.empty()) flags.push_back({"only", args.only});
  if (step_given) flags.push_back({"step", num(args.step)});
  std::string report = banner("verify", flags);

  std::size_t passed = 0;
  for (const auto& r : results) {
    report +=
        std::string(r.passed ? "PASS" : "FAIL") + " " + r.name + ": " + r.detail + "\n";
    if (r.passed) ++passed;
  }
  report +=
      std::to_string(passed) + "/" + std::to_string(results.size()) + " checks passed\n";

  const int emit_rc = emit(args.output, report);
  if (emit_rc != kOk) return emit_rc;
  return passed == results.size() ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Zener sweep and time-ordered series toolkit"};
  app.require_subcommand(1);
  ConfigMerge cfg;

  EvolveArgs evolve_args;
  CLI::App* evolve =
      app.add_subcommand("evolve", "Propagate one sweep and emit the trajectory");
  evolve->add_option("--gamma", evolve_args.gamma, "dimensionless adiabaticity");
  evolve->add_option("--tau-max", evolve_args.tau_max, "half-width of the time window");
  evolve->add_option("--step", evolve_args.step, "integrator step");
  evolve->add_option("--method", evolve_args.method, "expmid or rk4");
  evolve->add_option("--output", evolve_args.output, "output path (default stdout)");
  evolve->add_option("--config", evolve_args.config, "key=value file; flags override");
  cfg.bind_double(evolve, "gamma", &evolve_args.gamma);
  cfg.bind_double(evolve, "tau-max", &evolve_args.tau_max);
  cfg.bind_double(evolve, "step", &evolve_args.step);
  cfg.bind_string(evolve, "method", &evolve_args.method);
  cfg.bind_string(evolve, "output", &evolve_args.output);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Survival probability across gamma");
  CLI::Option* gammas_opt =
      sweep->add_option("--gammas", sweep_args.gammas, "comma-separated gamma list")
          ->delimiter(',');
  CLI::Option* gmin = sweep->add_option("--gamma-min", sweep_args.gamma_min, "range start");
  CLI::Option* gmax = sweep->add_option("--gamma-max", sweep_args.gamma_max, "range end");
  sweep->add_option("--gamma-step", sweep_args.gamma_step, "range spacing");
  sweep->add_option("--tau-max", sweep_args.tau_max, "half-width of the time window");
  sweep->add_option("--step", sweep_args.step, "integrator step");
  sweep->add_option("--method", sweep_args.method, "expmid or rk4");
  sweep->add_option("--averaging-periods", sweep_args.averaging_periods,
                    "terminal oscillation periods averaged");
  sweep->add_option("--output", sweep_args.output, "output path (default stdout)");
  sweep->add_option("--config", sweep_args.config, "key=value file; flags override");
  gammas_opt->excludes(gmin)->excludes(gmax);
  cfg.bind_double_list(sweep, "gammas", &sweep_args.gammas);
  cfg.bind_double(sweep, "gamma-min", &sweep_args.gamma_min);
  cfg.bind_double(sweep, "gamma-max", &sweep_args.gamma_max);
  cfg.bind_double(sweep, "gamma-step", &sweep_args.gamma_step);
  cfg.bind_double(sweep, "tau-max", &sweep_args.tau_max);
  cfg.bind_double(sweep, "step", &sweep_args.step);
  cfg.bind_string(sweep, "method", &sweep_args.method);
  cfg.bind_int(sweep, "averaging-periods", &sweep_args.averaging_periods);
  cfg.bind_string(sweep, "output", &sweep_args.output);

  DysonArgs dyson_args;
  CLI::App* dyson =
      app.add_subcommand("dyson", "Time-ordered series term by quadrature");
  dyson->add_option("--order", dyson_args.order, "term order n");
  dyson->add_option("--window", dyson_args.window, "truncation half-width T");
  dyson->add_option("--grid", dyson_args.grid, "grid cells across [-T, T]");
  dyson->add_option("--averaging-windows", dyson_args.averaging_windows,
                    "window values averaged over one endpoint period");
  dyson->add_flag("--expensive", dyson_args.expensive, "allow the slow order n=3");
  dyson->add_option("--output", dyson_args.output, "output path (default stdout)");
  dyson->add_option("--config", dyson_args.config, "key=value file; flags override");
  cfg.bind_int(dyson, "order", &dyson_args.order);
  cfg.bind_double(dyson, "window", &dyson_args.window);
  cfg.bind_size(dyson, "grid", &dyson_args.grid);
  cfg.bind_int(dyson, "averaging-windows", &dyson_args.averaging_windows);
  cfg.bind_string(dyson, "output", &dyson_args.output);

  SeriesArgs series_args;
  CLI::App* series =
      app.add_subcommand("series", "Partial sums of the resummed series");
  series->add_option("--gamma", series_args.gamma, "dimensionless adiabaticity");
  series->add_option("--order", series_args.order, "highest partial-sum order");
  series->add_option("--output", series_args.output, "output path (default stdout)");
  series->add_option("--config", series_args.config, "key=value file; flags override");
  cfg.bind_double(series, "gamma", &series_args.gamma);
  cfg.bind_int(series, "order", &series_args.order);
  cfg.bind_string(series, "output", &series_args.output);

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Run every module's invariant checks");
  verify->add_option("--only", verify_args.only, "restrict to one module");
  verify->add_option("--step", verify_args.step, "override the propagator checks' step");
  verify->add_option("--epsilon", verify_args.epsilon,
                     "pole regularization for the step-function checks");
  verify->add_option("--omega", verify_args.omega,
                     "frequency truncation for the step-function checks");
  verify->add_option("--output", verify_args.output, "output path (default stdout)");
  verify->add_option("--config", verify_args.config, "key=value file; flags override");
  cfg.bind_string(verify, "only", &verify_args.only);
  cfg.bind_double(verify, "step", &verify_args.step);
  cfg.bind_double(verify, "epsilon", &verify_args.epsilon);
  cfg.bind_double(verify, "omega", &verify_args.omega);
  cfg.bind_string(verify, "output", &verify_args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  }

  try {
    CLI::App* parsed = nullptr;
    std::string* config_path = nullptr;
    if (evolve->parsed()) {
      parsed = evolve;
      config_path = &evolve_args.config;
    } else if (sweep->parsed()) {
      parsed = sweep;
      config_path = &sweep_args.config;
    } else if (dyson->parsed()) {
      parsed = dyson;
      config_path = &dyson_args.config;
    } else if (series->parsed()) {
      parsed = series;
      config_path = &series_args.config;
    } else if (verify->parsed()) {
      parsed = verify;
      config_path = &verify_args.config;
    }
    if (parsed != nullptr && !config_path->empty()) {
      std::string err;
      if (!cfg.apply(*config_path, err)) throw lz::validation_error(err);
    }

    if (evolve->parsed()) return run_evolve(evolve_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (dyson->parsed()) return run_dyson(dyson_args);
    if (series->parsed()) return run_series(series_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "lz-dyson: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
