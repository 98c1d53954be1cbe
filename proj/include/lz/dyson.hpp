#pragma once

#include <span>
#include <vector>

#include "lz/model.hpp"
#include "lz/special.hpp"

namespace lz {

// (pi/2)^n / n!.
double dyson_term_analytic(int n);

struct DysonOptions {
  double window = 30.0;            // half-width T of the truncated time axis
  std::size_t grid_points = 200000;  // cells across [-T, T]
  int averaging_windows = 8;       // T values spanning one endpoint period
  bool swap_kernels = false;       // conjugate alternation (diagnostic)
};

struct DysonTerm {
  int n;
  Complex numeric;
  double analytic;
  double abs_error;
  double window;
  std::size_t grid_points;
};

// 2n-fold time-ordered integral of alternating kernels e^{-i t^2}, e^{+i t^2}
// (outermost carries e^{-i t^2}), evaluated by nested cumulative Simpson and
// averaged over window half-widths spanning one endpoint oscillation period
// (the integral converges only conditionally).
DysonTerm dyson_term_numeric(int n, const DysonOptions& opts = {});

// (1/2 pi i)^n times the n-fold frequency-ordered integral of identical
// kernels 1/(w - i eps) over [-Omega, Omega]; tends to (1/2)^n / n!.
Complex frequency_ordered_check(int n, const RegularizedTheta& reg);

struct OrderingCheck {
  double ordered;  // n-fold time-ordered integral of f
  double power;    // (int f)^n / n!
};

// Direct witness that ordering n identical copies of an integrable function
// just divides the n-th power of its integral by n!.  f is sampled on a
// uniform grid of spacing `step` (odd sample count).
OrderingCheck identical_function_ordering_check(std::span<const double> f_samples,
                                                double step, int n);

struct SeriesSum {
  double gamma;
  int orders;
  std::vector<double> partial_sums;  // k = 0 .. orders
  double limit;                      // e^{-pi gamma / 2}
};

// Partial sums of sum_n (-gamma)^n (pi/2)^n / n!.
SeriesSum series_sum(Gamma gamma, int orders);

}  // namespace lz
