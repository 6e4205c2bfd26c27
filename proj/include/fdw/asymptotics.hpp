#pragma once

#include <optional>
#include <utility>

#include "fdw/complex_analysis.hpp"
#include "fdw/schemes.hpp"
#include "fdw/util.hpp"

namespace fdw {

enum class PredictionMode { Stable, Unstable };

struct PredictionDiagnostics {
  cplx g0_plus{}, g0_minus{};   // branch-point boundary sums
  cplx g1_plus{}, g1_minus{};
  cplx gR{}, gL{};              // saddle-point boundary sums
  cplx sigma{};
  std::optional<double> residue;
  double offset = 0;            // j + C n (front) or j - C n (gaussian)
  std::optional<std::pair<double, double>> envelope;
  double nu = 0;
  double theta_sp = 0;
  double xi_sp = 0;
};

struct Prediction {
  Zone zone = Zone::NearWall;
  int n = 0;
  int j = 0;
  double value = 0;
  double scale_exponent = 0;  // -3/2, -1/2, -1/3 or 0 (residue-dominated)
  PredictionDiagnostics diagnostics;
};

/// Fixed-j asymptotic of the corner-source error, O(n^{-3/2}) scale.
/// Unstable mode adds the (-1)^n residue plateau on top of the same tail.
/// For the upwind boundary both the general branch-point expression and its
/// trigonometric specialization are evaluated and must agree to 1e-12.
Prediction predict_near_wall(const BoundaryScheme& boundary, const BulkScheme& bulk,
                             int n, int j, PredictionMode mode);

/// The upwind specialization alone (exposed for dual-path checks).
double near_wall_upwind_form(double courant, int n, int j);

/// Interior-ray asymptotic at nu = j/n in (0, |C|), O(n^{-1/2}) scale.
/// Envelope amplitudes (the two parity classes) are attached for schemes
/// with real saddle sums.
Prediction predict_transition(const BoundaryScheme& boundary, const BulkScheme& bulk,
                              int n, int j, PredictionMode mode);

/// Airy profile around j ~ |C| n, O(n^{-1/3}) scale; the unstable variant
/// carries the residue times (1/3 - int_0^{offset/w} Ai).
Prediction predict_front(const BoundaryScheme& boundary, const BulkScheme& bulk,
                         int n, int j, PredictionMode mode);

/// Dissipative bulk: discrete Gaussian around j ~ C n with variance
/// 2 n (1/w - 1/2)(1 - C^2).
Prediction predict_gaussian(const BoundaryScheme& boundary, const BulkScheme& bulk,
                            int n, int j);

/// Limit of the spatial L2 norm, by periodic-trapezoid quadrature of the
/// weighted Parseval integrand with the kappa_s-consistent square-root
/// branch. Node count doubles from `initial_nodes` until successive values
/// differ by less than 1e-9. Throws numerical_error if the imaginary
/// residue of the quadrature exceeds 1e-6 (branch inconsistency).
double l2_asymptote(const BoundaryScheme& boundary, const BulkScheme& bulk,
                    int initial_nodes = 1 << 14);

/// sqrt(1 - sqrt(1 - C^2)): the Dirichlet case in closed form.
double dirichlet_l2_closed_form(double courant);

/// Leading asymptotics of sum_j j^order (-1)^{j alt} eps_j^n, including the
/// n-linear first-moment term.
double moment_asymptote(const BoundaryScheme& boundary, double courant, int order,
                        bool alternating, int n);

struct LpExponent {
  double exponent;
  Zone dominant;   // Transition for p < 4, Front for p > 4
  bool tie;        // p = 4
};

/// Growth exponent of ||eps^n||_p: max(1/p - 1/2, 1/(3p) - 1/3).
LpExponent lp_exponent(double p);

}  // namespace fdw
