#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fdw/util.hpp"

namespace fdw {

enum class GreenKind { First, Second };    // Dirac at n = 0 / at n = 1
enum class FrontSide { Physical, Spurious };

/// One time row of a whole-line Green function, j in [j_min, j_min + size).
struct GreenField {
  GreenKind which = GreenKind::Second;
  int time_index = 0;
  int j_min = 0;
  std::vector<double> values;

  double at(int j) const {
    const long idx = long(j) - j_min;
    if (idx < 0 || idx >= long(values.size())) return 0.0;
    return values[static_cast<std::size_t>(idx)];
  }
  int j_max() const { return j_min + static_cast<int>(values.size()) - 1; }
};

/// Leap-frog recurrence on the whole line with Dirac data; |courant| < 1.
void green_simulate_rows(
    double courant, GreenKind which, int n_max,
    const std::function<void(int n, int j_min, std::span<const double>)>& on_row);

std::vector<GreenField> green_simulate(double courant, GreenKind which, int n_max,
                                       std::vector<int> snapshots = {});

/// Fourier symbol of the second Green function, exponential closed form:
/// (1/sqrt(2 pi)) (e^{-i n asin(C sin xi)} + (-1)^{n+1} e^{i n asin(C sin xi)})
///   / (2 sqrt(1 - C^2 sin^2 xi)).
cplx green_fourier(double courant, int n, double xi);

/// Chebyshev-polynomial form of the same symbol, kept as a diagnostic; its
/// parity bookkeeping disagrees with the exponential form (checked at
/// xi = 0), and the exponential form is the one matching the recurrence.
cplx green_fourier_chebyshev(double courant, int n, double xi);

/// max_xi |exponential - chebyshev| over a uniform grid.
double green_fourier_deviation(double courant, int n, int n_xi);

/// Interior-ray asymptotic of S_j^n for |j| < |C| n, O(n^{-1/2}) scale.
/// Meaningful on the admissible parity (n + j odd); the exact values vanish
/// on the complementary parity.
double green_transition_predict(double courant, int n, int j);

/// Airy front profiles around j ~ -+ C n with the parity mask
/// |((-1)^n - (-1)^j)/2|.
double green_front_predict(double courant, int n, int j, FrontSide side);

/// lim_n ||S^n||_2 = 1/(sqrt(2) (1-C^2)^{1/4}).
double green_l2_limit(double courant);

/// ||S^n||_2 from the recurrence.
double green_l2_series(double courant, int n);

struct TraceDivergence {
  double partial_sum;       // sum_{n<=N} |S_0^n|^2
  double fitted_log_coeff;  // least-squares slope vs ln n over [N/10, N]
};

/// Partial sums of the squared trace and their logarithmic growth rate.
TraceDivergence trace_divergence(double courant, int N);

/// The printed closed-form rate constant 1/(pi |C| sqrt(1-C^2)).
double trace_log_coefficient_formula(double courant);

/// Slope implied by the transition-zone asymptotic itself (half the
/// printed constant); this is what the recurrence reproduces.
double trace_log_coefficient_observed(double courant);

struct GreenSaddle {
  double xi_sp;
  double f_second;
  FrontSide symbol;  // which phase function f_-+ the point belongs to
};

/// Stationary points of the Fourier phases nu xi +- asin(C sin xi):
/// glancing at nu = 0 (xi = +-pi/2), degenerate at |nu| = |C|, absent for
/// |nu| > |C|.
std::vector<GreenSaddle> green_saddle_points(double courant, double nu);

}  // namespace fdw
