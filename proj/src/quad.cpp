#include "lz/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lz/errors.hpp"

namespace lz {

namespace {

template <typename T>
T simpson_uniform_impl(std::span<const T> f, double h) {
  if (f.size() < 3 || f.size() % 2 == 0) {
    throw contract_error("simpson_uniform: need an odd node count >= 3");
  }
  T acc{};
  for (std::size_t i = 0; i + 2 < f.size(); i += 2) {
    acc += f[i] + 4.0 * f[i + 1] + f[i + 2];
  }
  return (h / 3.0) * acc;
}

template <typename T>
void cumulative_impl(std::span<const T> f, double h, std::span<T> out) {
  if (f.size() < 3 || f.size() % 2 == 0 || out.size() != f.size()) {
    throw contract_error("cumulative_simpson_uniform: need odd node count and matching output");
  }
  out[0] = T{};
  for (std::size_t i = 0; i + 2 < f.size(); i += 2) {
    out[i + 1] = out[i] + (h / 12.0) * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
    out[i + 2] = out[i] + (h / 3.0) * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  }
}

}  // namespace

Complex simpson_uniform(std::span<const Complex> f, double h) {
  return simpson_uniform_impl(f, h);
}

double simpson_uniform(std::span<const double> f, double h) {
  return simpson_uniform_impl(f, h);
}

void cumulative_simpson_uniform(std::span<const Complex> f, double h,
                                std::span<Complex> out) {
  cumulative_impl(f, h, out);
}

void cumulative_simpson_uniform(std::span<const double> f, double h,
                                std::span<double> out) {
  cumulative_impl(f, h, out);
}

namespace {

struct PanelSpec {
  double lo, hi;
  std::size_t cells;
};

std::size_t even_cells(double width, double h_target, std::size_t min_cells) {
  std::size_t n = static_cast<std::size_t>(std::ceil(width / h_target));
  n = std::max(n, min_cells);
  if (n % 2 != 0) ++n;
  return n;
}

}  // namespace

PanelGrid pole_panel_grid(double eps, double omega, double max_abs_t) {
  if (!(eps > 0.0) || !(omega > 100.0 * eps)) {
    throw validation_error("pole_panel_grid: require eps > 0 and omega > 100*eps");
  }

  const double delta = 100.0 * eps;
  // Phase advances by at most ~0.25 rad per cell on the outer panels.
  const double phase_cap =
      max_abs_t > 0.0 ? 0.25 / max_abs_t : std::numeric_limits<double>::infinity();

  std::vector<PanelSpec> positive;
  double lo = delta;
  while (lo < omega) {
    const double hi = std::min(2.0 * lo, omega);
    const double h_target = std::min(lo / 32.0, phase_cap);
    positive.push_back({lo, hi, even_cells(hi - lo, h_target, 4)});
    lo = hi;
  }

  PanelGrid grid;
  grid.nodes.push_back(-omega);

  auto append_panel = [&grid](double a, double b, std::size_t cells) {
    PanelGrid::Panel p;
    p.first = grid.nodes.size() - 1;
    p.cells = cells;
    p.h = (b - a) / static_cast<double>(cells);
    for (std::size_t j = 1; j <= cells; ++j) {
      grid.nodes.push_back(a + p.h * static_cast<double>(j));
    }
    grid.nodes.back() = b;  // snap the panel edge
    grid.panels.push_back(p);
  };

  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    append_panel(-it->hi, -it->lo, it->cells);
  }

  const double h_center = std::min(eps / 20.0, phase_cap);
  append_panel(-delta, delta, even_cells(2.0 * delta, h_center, 8));

  for (const auto& p : positive) {
    append_panel(p.lo, p.hi, p.cells);
  }

  return grid;
}

Complex panel_integrate(const PanelGrid& grid, std::span<const Complex> f) {
  if (f.size() != grid.nodes.size()) {
    throw contract_error("panel_integrate: sample count mismatch");
  }
  Complex acc{};
  for (const auto& p : grid.panels) {
    acc += simpson_uniform(f.subspan(p.first, p.cells + 1), p.h);
  }
  return acc;
}

std::vector<Complex> panel_cumulative(const PanelGrid& grid,
                                      std::span<const Complex> f) {
  if (f.size() != grid.nodes.size()) {
    throw contract_error("panel_cumulative: sample count mismatch");
  }
  std::vector<Complex> out(f.size());
  std::vector<Complex> scratch;
  for (const auto& p : grid.panels) {
    scratch.resize(p.cells + 1);
    cumulative_simpson_uniform(f.subspan(p.first, p.cells + 1), p.h,
                               std::span<Complex>(scratch));
    const Complex base = out[p.first];
    for (std::size_t j = 0; j <= p.cells; ++j) {
      out[p.first + j] = base + scratch[j];
    }
  }
  return out;
}

}  // namespace lz
