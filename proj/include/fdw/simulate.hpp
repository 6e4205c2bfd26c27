#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fdw/field.hpp"
#include "fdw/schemes.hpp"

namespace fdw {

struct SimulateOptions {
  std::vector<int> snapshots;      // rows to return; defaults to {n_max}
  double corner_amplitude = 1.0;   // eps_0^1 value
  bool allow_truncation = false;   // permit j_max < n_max (clipped support)
};

/// Window wide enough that the growing support never reaches the right edge.
int default_window(const BoundaryScheme& boundary, int n_max);

/// Runs the corner-source error recurrence and hands each row (n, values)
/// to `on_row`, including the initial rows n = 0 and n = 1. Rows are views
/// over internal storage valid only during the call.
void simulate_error_rows(const BulkScheme& bulk, const BoundaryScheme& boundary,
                         int n_max, int j_max,
                         const std::function<void(int, std::span<const double>)>& on_row,
                         double corner_amplitude = 1.0);

/// Snapshot interface. j_max < 0 selects default_window(boundary, n_max).
std::vector<ErrorField> simulate_error(const BulkScheme& bulk,
                                       const BoundaryScheme& boundary, int n_max,
                                       int j_max = -1, SimulateOptions opts = {});

/// Closed-form value of the manufactured scheme with Dirichlet boundary:
/// C * C^{j-1} (1-C)^{n-2-(j-1)} binom(n-2, j-1) for n >= 2, 1 <= j <= n-1.
double manufactured_closed_form(double courant, int n, int j);

struct PdeSolution {
  ErrorField u;   // numerical solution on [0, 1] at the final step
  ErrorField e;   // pointwise error exact - numerical on [0, 1]
  double dx = 0;
  double dt = 0;
  int steps = 0;
  double t_final = 0;
};

/// Leap-frog approximation of u_t + a u_x = 0 (a = -1) on the half-line,
/// restricted to the window [0, 1]. The mesh extends far enough to the
/// right that the artificial edge stays outside the domain of dependence
/// of [0, 1] x [0, t_final]; the far edge is filled with exact samples.
PdeSolution simulate_pde(const BoundaryScheme& boundary, const CornerScheme& corner,
                         const std::function<double(double)>& initial_datum,
                         double dx, double courant, double t_final);

}  // namespace fdw
