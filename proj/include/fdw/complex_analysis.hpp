#pragma once

#include <array>
#include <vector>

#include "fdw/schemes.hpp"
#include "fdw/util.hpp"

namespace fdw {

/// a(z) k^2 + b(z) k + c(z) = 0, the spatial characteristic equation of the
/// bulk scheme, together with first and second z-derivatives of a, b, c.
struct CharQuadratic {
  cplx a, b, c;
  cplx da, db, dc;
  cplx d2a, d2b, d2c;
};

CharQuadratic characteristic_quadratic(const BulkScheme& bulk, cplx z);

/// The root with |kappa| < 1 for |z| > 1. Points within 1e-8 of the unit
/// circle are evaluated at radius 1 + 1e-8 (radial limit from outside).
cplx kappa_s(const BulkScheme& bulk, cplx z);

struct KappaDiagnostics {
  bool shell_applied = false;   // input was moved to the 1 + 1e-8 radius
  bool modulus_tie = false;     // root moduli within 1e-9 (near branch point)
};

/// kappa_s with evaluation diagnostics.
cplx kappa_s(const BulkScheme& bulk, cplx z, KappaDiagnostics& diag);

/// Both roots, sorted by modulus (smaller first).
std::array<cplx, 2> kappa_roots(const BulkScheme& bulk, cplx z);

/// Root selection by continuity: when the two moduli are within 1e-9 of
/// each other (near a branch point) the root closer to `hint` wins.
cplx kappa_s_continuous(const BulkScheme& bulk, cplx z, cplx hint);

/// d kappa / dz and d^2 kappa / dz^2 by implicit differentiation, evaluated
/// at a known root `kappa` of the characteristic quadratic at z.
cplx kappa_prime_at(const BulkScheme& bulk, cplx z, cplx kappa);
cplx kappa_second_at(const BulkScheme& bulk, cplx z, cplx kappa);

struct BranchPointSet {
  double angle = 0;                 // theta_BP (leap-frog)
  std::array<cplx, 4> points{};
  bool inside_disk = false;         // all strictly inside the unit disk
  bool degenerate_quartic = false;  // dissipative omega = 2/(1+C)
};

/// Zeros of the discriminant quartic of the characteristic quadratic,
/// solved as a quadratic in z^2. For leap-frog these sit on the unit
/// circle at angles +-theta_BP, pi -+ theta_BP with
/// theta_BP = arccos(1 - 2C^2) / 2.
BranchPointSet branch_points(const BulkScheme& bulk);

enum class Zone { NearWall, Transition, Front, AheadOfFront };
const char* zone_name(Zone z);

struct SaddlePointSet {
  double nu = 0;
  Zone zone = Zone::NearWall;
  double theta_sp = 0;  // transition zone only
  double xi_sp = 0;
  std::vector<cplx> points;
  std::vector<cplx> kappa_at_points;
  cplx second_derivative{};  // f'' at e^{i theta_sp} (0 in the front zone)
  bool degenerate = false;
};

/// Zone classification and saddle data of f(.; nu). Leap-frog covers all
/// zones; the dissipative bulk is supported at nu = C (its peak), where the
/// saddles +-1 are non-degenerate with f'' = 2/C^2 (1/w - 1/2)(1 - C^2).
SaddlePointSet saddle_points(const BulkScheme& bulk, double nu);

/// Closed form of sigma(nu) = f''(e^{i theta_SP}; nu), leap-frog.
cplx transition_sigma(const BulkScheme& bulk, double nu);

/// f(z; nu) = log z + nu log kappa_s(z), principal determinations.
cplx f_eval(const BulkScheme& bulk, cplx z, double nu);
cplx f_prime(const BulkScheme& bulk, cplx z, double nu);
cplx f_second(const BulkScheme& bulk, cplx z, double nu);

/// Same derivatives with the characteristic root supplied by the caller
/// (used to probe saddle points with their exact kappa values).
cplx f_prime_at(const BulkScheme& bulk, cplx z, cplx kappa, double nu);
cplx f_second_at(const BulkScheme& bulk, cplx z, cplx kappa, double nu);

/// D(z) = z^2 - z sum_k b_k kappa_s^k - sum_k bt_k kappa_s^k.
cplx boundary_determinant(const BoundaryScheme& boundary, const BulkScheme& bulk, cplx z);
cplx boundary_determinant_at(const BoundaryScheme& boundary, cplx z, cplx kappa);
cplx boundary_determinant_prime(const BoundaryScheme& boundary, const BulkScheme& bulk, cplx z);

class pole_error : public numerical_error {
 public:
  pole_error(const std::string& what, cplx where) : numerical_error(what), pole(where) {}
  cplx pole;
};

/// g(z) = (2 pi i)^{-1} / D(z); throws pole_error when D(z) ~ 0.
cplx g_eval(const BoundaryScheme& boundary, const BulkScheme& bulk, cplx z);

struct ResidueValue {
  double r;
};

/// 2 pi i Res_{-1} g = -(2 + sum b_k + (1/C) sum k (b_k - bt_k))^{-1},
/// defined when D has a simple zero at z = -1. Throws otherwise, naming
/// the failed condition.
ResidueValue residue_R(const BoundaryScheme& boundary, double courant);

}  // namespace fdw
