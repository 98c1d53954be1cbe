#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lz {

using Complex = std::complex<double>;

// Composite Simpson over a uniform grid of f.size()-1 cells (even count).
Complex simpson_uniform(std::span<const Complex> f, double h);
double simpson_uniform(std::span<const double> f, double h);

// Prefix integrals at every node of a uniform grid.  Even nodes come from
// the composite pair rule, odd nodes from the quadratic half-cell rule
// h*(5 f0 + 8 f1 - f2)/12, so the table is usable as the integrand of the
// next nesting level.
void cumulative_simpson_uniform(std::span<const Complex> f, double h,
                                std::span<Complex> out);
void cumulative_simpson_uniform(std::span<const double> f, double h,
                                std::span<double> out);

// Piecewise-uniform symmetric grid on [-omega, omega] graded to resolve a
// Lorentzian core of width eps around zero and an oscillation e^{i w t} up
// to |t| = max_abs_t.  Panels abut and each holds an even cell count.
struct PanelGrid {
  struct Panel {
    std::size_t first;  // index of the panel's first node
    double h;
    std::size_t cells;  // even
  };
  std::vector<double> nodes;
  std::vector<Panel> panels;
};

PanelGrid pole_panel_grid(double eps, double omega, double max_abs_t);

Complex panel_integrate(const PanelGrid& grid, std::span<const Complex> f);
std::vector<Complex> panel_cumulative(const PanelGrid& grid,
                                      std::span<const Complex> f);

}  // namespace lz
