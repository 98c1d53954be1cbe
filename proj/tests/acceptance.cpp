// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all
// criteria hold.  Criteria 1 and 10 drive the installed CLI end to end; the
// rest call the library directly at the documented default settings.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lz/analytic.hpp"
#include "lz/dyson.hpp"
#include "lz/mat2.hpp"
#include "lz/model.hpp"
#include "lz/propagator.hpp"
#include "lz/special.hpp"

namespace fs = std::filesystem;
using namespace lz;

namespace {

constexpr double kPi = std::numbers::pi;
int g_failures = 0;

void report(int criterion, bool passed, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", passed ? "PASS" : "FAIL", criterion, what.c_str());
  if (!passed) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const fs::path out_path = fs::temp_directory_path() / "lz_acceptance_stdout.txt";
  const std::string cmd =
      std::string(LZ_DYSON_BIN) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(status), ss.str()};
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#' || std::isalpha(line[0])) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

// 1. end-to-end sweep against e^{-pi gamma} at defaults, under 30 s
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const CliRun r = run_cli("sweep --gammas 0.1,0.5,1,2");
  const auto t1 = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(t1 - t0).count();

  bool ok = r.exit_code == 0;
  double worst = 1.0;
  const auto rows = parse_csv_rows(r.out);
  ok = ok && rows.size() == 4;
  if (ok) {
    worst = 0.0;
    for (const auto& row : rows) {
      worst = std::max(worst, std::abs(row[1] - std::exp(-kPi * row[0])));
    }
  }
  ok = ok && worst < 1e-2 && seconds < 30.0;
  report(1, ok,
         "sweep gammas {0.1,0.5,1,2}: max |p_numeric - e^{-pi gamma}| = " + fmt(worst) +
             " (tol 1e-2), runtime " + fmt(seconds) + " s (limit 30)");
}

// 2. T2 by direct oscillatory quadrature
void criterion_2() {
  const DysonTerm t = dyson_term_numeric(1, {});
  const bool ok =
      t.abs_error < 0.01 * t.analytic && std::abs(t.numeric.imag()) < 0.02 * t.numeric.real();
  report(2, ok,
         "T2 = " + std::to_string(t.numeric.real()) + " vs pi/2, error " + fmt(t.abs_error) +
             " (tol 1%), |Im|/Re = " + fmt(std::abs(t.numeric.imag() / t.numeric.real())) +
             " (tol 2%)");
}

// 3. T4 by direct oscillatory quadrature
void criterion_3() {
  const DysonTerm t = dyson_term_numeric(2, {});
  const bool ok = t.abs_error < 0.03 * t.analytic;
  report(3, ok,
         "T4 = " + std::to_string(t.numeric.real()) + " vs pi^2/8, error " +
             fmt(t.abs_error) + " (tol 3%)");
}

// 4. series resummation to e^{-pi gamma / 2}
void criterion_4() {
  double worst = 0.0;
  for (double gamma : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const SeriesSum s = series_sum(Gamma{gamma}, 25);
    worst = std::max(worst, std::abs(s.partial_sums.back() - s.limit));
  }
  report(4, worst < 1e-10,
         "series_sum(gamma, 25) vs e^{-pi gamma/2} over gamma <= 2: max error " +
             fmt(worst) + " (tol 1e-10)");
}

// 5. frequency-ordered reduction
void criterion_5() {
  const RegularizedTheta reg{1e-3, 1e4};
  const double e1 = std::abs(frequency_ordered_check(1, reg) - 0.5);
  const double e2 = std::abs(frequency_ordered_check(2, reg) - 0.125);
  report(5, e1 < 1e-3 && e2 < 1e-2,
         "frequency-ordered: n=1 error " + fmt(e1) + " (tol 1e-3), n=2 error " + fmt(e2) +
             " (tol 1e-2)");
}

// 6. regularized step function
void criterion_6() {
  const RegularizedTheta reg{1e-3, 1e4};
  const double e_plus = std::abs(theta_numeric(1.0, reg) - 1.0);
  const double e_minus = std::abs(theta_numeric(-1.0, reg));
  const double e_half = std::abs(theta_halfvalue(reg) - 0.5);
  report(6, e_plus < 5e-3 && e_minus < 5e-3 && e_half < 1e-4,
         "Theta(+1) error " + fmt(e_plus) + ", Theta(-1) error " + fmt(e_minus) +
             " (tol 5e-3), half-value error " + fmt(e_half) + " (tol 1e-4)");
}

// 7. parity structure of rotating-coupling products
void criterion_7() {
  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> tau_dist(-10.0, 10.0);
  std::uniform_real_distribution<double> gamma_dist(0.1, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Gamma g{gamma_dist(rng)};
    Mat2C prod = Mat2C::identity();
    for (int k = 1; k <= 7; ++k) {
      prod = mat_mul(prod, hamiltonian_interaction(tau_dist(rng), g));
      const double resid = k % 2 == 1
                               ? std::max(std::abs(prod.m00), std::abs(prod.m11))
                               : std::max(std::abs(prod.m01), std::abs(prod.m10));
      worst = std::max(worst, resid);
    }
  }
  report(7, worst <= 1e-13,
         "random coupling products, k <= 7: max off-parity entry " + fmt(worst) +
             " (tol 1e-13)");
}

// 8. numerical hygiene: norm drift, picture agreement, convergence order
void criterion_8() {
  SpinorState init;
  const Trajectory t =
      evolve(Gamma{0.5}, TimeGrid{-60.0, 60.0, 2e-3}, init, Method::ExpMidpoint);
  double drift = 0.0;
  for (const auto& s : t.samples) drift = std::max(drift, std::abs(s.norm_sq() - 1.0));

  SpinorState lab;
  SpinorState inter;
  inter.picture = Picture::Interaction;
  const TimeGrid grid{-20.0, 20.0, 5e-5};
  const Trajectory tl = evolve(Gamma{0.5}, grid, lab, Method::ExpMidpoint);
  const Trajectory ti = evolve(Gamma{0.5}, grid, inter, Method::ExpMidpoint);
  double pic_diff = 0.0;
  for (std::size_t i = 0; i < tl.samples.size(); ++i) {
    pic_diff =
        std::max(pic_diff, std::abs(std::abs(tl.samples[i].a) - std::abs(ti.samples[i].a)));
  }

  auto endpoint = [](double h) {
    SpinorState s;
    const Trajectory tr = evolve(Gamma{0.5}, TimeGrid{-20.0, 20.0, h}, s, Method::ExpMidpoint);
    return std::norm(tr.samples.back().a);
  };
  const double ref = endpoint(1.25e-3);
  const double ratio =
      std::abs(endpoint(4e-2) - ref) / std::abs(endpoint(2e-2) - ref);

  const bool ok = drift < 1e-8 && pic_diff < 1e-8 && ratio >= 4.0;
  report(8, ok,
         "norm drift " + fmt(drift) + " (tol 1e-8), picture |a| gap " + fmt(pic_diff) +
             " (tol 1e-8), halving ratio " + fmt(ratio) + " (>= 4)");
}

// 9. consistency triangle at gamma = 1/2
void criterion_9() {
  const SeriesSum s = series_sum(Gamma{0.5}, 25);
  const SurvivalResult r = survival_probability(Gamma{0.5}, 60.0, {});
  const double amp_series = s.partial_sums.back();
  const double amp_prop = std::sqrt(r.p_numeric);
  const double amp_closed = std::exp(-kPi / 4.0);
  const double worst =
      std::max({std::abs(amp_series - amp_prop), std::abs(amp_series - amp_closed),
                std::abs(amp_prop - amp_closed)});
  report(9, worst <= 2e-2,
         "sqrt(p), series limit, e^{-pi gamma/2}: max pairwise gap " + fmt(worst) +
             " (tol 2e-2)");
}

// 10. byte-identical artifacts, concurrent sweep included
void criterion_10() {
  const fs::path a = fs::temp_directory_path() / "lz_acc_sweep_a.csv";
  const fs::path b = fs::temp_directory_path() / "lz_acc_sweep_b.csv";
  const std::string flags = "sweep --gammas 0.1,0.5,1,2 --output ";
  const int rc1 = run_cli(flags + a.string()).exit_code;
  const int rc2 = run_cli(flags + b.string()).exit_code;

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string ca = slurp(a), cb = slurp(b);
  const bool ok = rc1 == 0 && rc2 == 0 && !ca.empty() && ca == cb;
  fs::remove(a);
  fs::remove(b);
  report(10, ok,
         std::string("repeated concurrent sweep runs are byte-identical: ") +
             (ok ? "yes" : "no") + " (" + std::to_string(ca.size()) + " bytes)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return EXIT_SUCCESS;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return EXIT_FAILURE;
}
