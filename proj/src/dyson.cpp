#include "lz/dyson.hpp"

#include <cmath>
#include <numbers>

#include "lz/errors.hpp"
#include "lz/quad.hpp"

namespace lz {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double dyson_term_analytic(int n) {
  if (n < 0) {
    throw validation_error("dyson_term_analytic: order must be >= 0");
  }
  double v = 1.0;
  for (int k = 1; k <= n; ++k) {
    v *= kPi / 2.0 / static_cast<double>(k);
  }
  return v;
}

DysonTerm dyson_term_numeric(int n, const DysonOptions& opts) {
  if (n < 1 || n > 3) {
    throw validation_error("dyson_term_numeric: order must be 1, 2 or 3");
  }
  if (!(opts.window > 0.0)) {
    throw validation_error("dyson_term_numeric: window must be positive");
  }
  if (opts.grid_points < 10000) {
    throw validation_error("dyson_term_numeric: need at least 1e4 grid points");
  }
  if (opts.averaging_windows < 1) {
    throw validation_error("dyson_term_numeric: averaging_windows must be >= 1");
  }

  const double t_max = opts.window;
  std::size_t cells = opts.grid_points;
  if (cells % 2 != 0) ++cells;
  const double h = 2.0 * t_max / static_cast<double>(cells);

  // Fastest kernel phase is 2 t h at the window edge.
  if (2.0 * t_max * h > 0.5) {
    throw resolution_error("dyson_term_numeric: grid under-resolves the kernel phase");
  }

  // Kernel tables over the full grid, shared by every averaging window.
  const std::size_t n_nodes = cells + 1;
  std::vector<Complex> k_plus(n_nodes), k_minus(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const double t = -t_max + h * static_cast<double>(i);
    k_plus[i] = std::polar(1.0, t * t);
    k_minus[i] = std::conj(k_plus[i]);
  }

  // Innermost kernel sign is +, alternating outward; the final (outermost)
  // integral carries -.  swap_kernels conjugates the whole alternation.
  auto kernel_at = [&](int level, std::size_t idx) -> Complex {
    const bool plus = (level % 2 == 1) != opts.swap_kernels;
    return plus ? k_plus[idx] : k_minus[idx];
  };

  // One endpoint oscillation period in T: the edge phase T^2 advances by
  // 2 pi when T shifts by pi / T.
  const double period = kPi / t_max;
  const int n_windows = opts.averaging_windows;

  std::vector<Complex> integrand(n_nodes), prefix(n_nodes);
  Complex acc{0.0, 0.0};

  for (int j = 0; j < n_windows; ++j) {
    const double offset = period * static_cast<double>(j) / static_cast<double>(n_windows);
    std::size_t margin = static_cast<std::size_t>(std::llround(offset / h));
    if (margin * 2 + 3 > n_nodes) margin = 0;
    const std::size_t base = margin;
    const std::size_t len = n_nodes - 2 * margin;  // odd

    for (std::size_t i = 0; i < len; ++i) integrand[i] = kernel_at(1, base + i);

    for (int level = 1; level < 2 * n; ++level) {
      cumulative_simpson_uniform(std::span<const Complex>(integrand.data(), len), h,
                                 std::span<Complex>(prefix.data(), len));
      for (std::size_t i = 0; i < len; ++i) {
        integrand[i] = kernel_at(level + 1, base + i) * prefix[i];
      }
    }

    acc += simpson_uniform(std::span<const Complex>(integrand.data(), len), h);
  }

  DysonTerm term;
  term.n = n;
  term.numeric = acc / static_cast<double>(n_windows);
  term.analytic = dyson_term_analytic(n);
  term.abs_error = std::abs(term.numeric - term.analytic);
  term.window = t_max;
  term.grid_points = cells;
  return term;
}

Complex frequency_ordered_check(int n, const RegularizedTheta& reg) {
  if (n < 1) {
    throw validation_error("frequency_ordered_check: order must be >= 1");
  }

  const PanelGrid grid = pole_panel_grid(reg.epsilon, reg.omega_window, 0.0);
  const std::size_t n_nodes = grid.nodes.size();

  // kernel already carries the 1/(2 pi i) normalization per integral
  std::vector<Complex> kernel(n_nodes);
  const Complex norm = Complex{0.0, -1.0} / (2.0 * kPi);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    kernel[i] = norm / Complex{grid.nodes[i], -reg.epsilon};
  }

  std::vector<Complex> integrand = kernel;
  for (int level = 1; level < n; ++level) {
    const std::vector<Complex> prefix = panel_cumulative(grid, integrand);
    for (std::size_t i = 0; i < n_nodes; ++i) integrand[i] = kernel[i] * prefix[i];
  }
  return panel_integrate(grid, integrand);
}

OrderingCheck identical_function_ordering_check(std::span<const double> f_samples,
                                                double step, int n) {
  if (n < 1) {
    throw validation_error("identical_function_ordering_check: order must be >= 1");
  }
  if (f_samples.size() < 3 || f_samples.size() % 2 == 0) {
    throw validation_error(
        "identical_function_ordering_check: need an odd sample count >= 3");
  }
  if (!(step > 0.0)) {
    throw validation_error("identical_function_ordering_check: step must be positive");
  }

  const double total = simpson_uniform(f_samples, step);

  std::vector<double> integrand(f_samples.begin(), f_samples.end());
  std::vector<double> prefix(f_samples.size());
  for (int level = 1; level < n; ++level) {
    cumulative_simpson_uniform(std::span<const double>(integrand), step,
                               std::span<double>(prefix));
    for (std::size_t i = 0; i < integrand.size(); ++i) {
      integrand[i] = f_samples[i] * prefix[i];
    }
  }
  const double ordered = simpson_uniform(std::span<const double>(integrand), step);

  double power = 1.0;
  for (int k = 1; k <= n; ++k) power *= total / static_cast<double>(k);

  return {ordered, power};
}

SeriesSum series_sum(Gamma gamma, int orders) {
  if (orders < 1) {
    throw validation_error("series_sum: orders must be >= 1");
  }

  SeriesSum out;
  out.gamma = gamma.value();
  out.orders = orders;
  out.limit = std::exp(-kPi * gamma.value() / 2.0);
  out.partial_sums.reserve(static_cast<std::size_t>(orders) + 1);

  double term = 1.0;
  double sum = 1.0;
  out.partial_sums.push_back(sum);
  for (int k = 1; k <= orders; ++k) {
    term *= -gamma.value() * kPi / 2.0 / static_cast<double>(k);
    sum += term;
    out.partial_sums.push_back(sum);
  }
  return out;
}

}  // namespace lz
