#include "fdw/complex_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdw {

namespace {

constexpr double kShell = 1e-8;    // radial-limit radius offset on the circle
constexpr double kTieTol = 1e-9;   // modulus tie threshold near branch points

cplx shell_adjust(cplx z) {
  double m = std::abs(z);
  if (std::abs(m - 1.0) < kShell) return z * ((1.0 + kShell) / m);
  return z;
}

std::array<cplx, 2> solve_quadratic(const CharQuadratic& q) {
  // Citardauq pairing keeps both roots accurate.
  cplx disc = std::sqrt(q.b * q.b - 4.0 * q.a * q.c);
  cplx s = (std::real(std::conj(q.b) * disc) >= 0.0) ? disc : -disc;
  cplx qq = -0.5 * (q.b + s);
  cplx r1 = qq / q.a;
  cplx r2 = q.c / qq;
  if (std::abs(r1) <= std::abs(r2)) return {r1, r2};
  return {r2, r1};
}

}  // namespace

CharQuadratic characteristic_quadratic(const BulkScheme& bulk, cplx z) {
  CharQuadratic q{};
  const double c = bulk.courant;
  switch (bulk.kind) {
    case BulkKind::LeapFrog:
      q.a = c * z;
      q.b = z * z - 1.0;
      q.c = -c * z;
      q.da = c;
      q.db = 2.0 * z;
      q.dc = -c;
      q.d2b = 2.0;
      break;
    case BulkKind::Dissipative: {
      const double w = bulk.omega;
      const double ap = 0.5 * ((w - 2.0) + w * c);
      const double am = 0.5 * ((w - 2.0) - w * c);
      q.a = ap * z;
      q.b = z * z + 1.0 - w;
      q.c = am * z;
      q.da = ap;
      q.db = 2.0 * z;
      q.dc = am;
      q.d2b = 2.0;
      break;
    }
    case BulkKind::ManufacturedDissipative: {
      const double d = c * (1.0 - c);
      q.a = d - c * z;
      q.b = 1.0 - 2.0 * d - z * z;
      q.c = c * z + d;
      q.da = -c;
      q.db = -2.0 * z;
      q.dc = c;
      q.d2b = -2.0;
      break;
    }
  }
  return q;
}

std::array<cplx, 2> kappa_roots(const BulkScheme& bulk, cplx z) {
  if (z == cplx(0.0, 0.0)) throw std::invalid_argument("kappa_s undefined at z = 0");
  return solve_quadratic(characteristic_quadratic(bulk, z));
}

cplx kappa_s(const BulkScheme& bulk, cplx z) {
  return kappa_roots(bulk, shell_adjust(z))[0];
}

cplx kappa_s(const BulkScheme& bulk, cplx z, KappaDiagnostics& diag) {
  const cplx zs = shell_adjust(z);
  diag.shell_applied = zs != z;
  const auto roots = kappa_roots(bulk, zs);
  diag.modulus_tie = std::abs(std::abs(roots[0]) - std::abs(roots[1])) < kTieTol;
  return roots[0];
}

cplx kappa_s_continuous(const BulkScheme& bulk, cplx z, cplx hint) {
  auto roots = kappa_roots(bulk, shell_adjust(z));
  if (std::abs(std::abs(roots[0]) - std::abs(roots[1])) < kTieTol)
    return std::abs(roots[0] - hint) <= std::abs(roots[1] - hint) ? roots[0] : roots[1];
  return roots[0];
}

cplx kappa_prime_at(const BulkScheme& bulk, cplx z, cplx kappa) {
  const auto q = characteristic_quadratic(bulk, z);
  const cplx denom = 2.0 * q.a * kappa + q.b;
  return -(q.da * kappa * kappa + q.db * kappa + q.dc) / denom;
}

cplx kappa_second_at(const BulkScheme& bulk, cplx z, cplx kappa) {
  const auto q = characteristic_quadratic(bulk, z);
  const cplx denom = 2.0 * q.a * kappa + q.b;
  const cplx kp = -(q.da * kappa * kappa + q.db * kappa + q.dc) / denom;
  return -(q.d2a * kappa * kappa + q.d2b * kappa + q.d2c +
           2.0 * (2.0 * q.da * kappa + q.db) * kp + 2.0 * q.a * kp * kp) /
         denom;
}

BranchPointSet branch_points(const BulkScheme& bulk) {
  const double c = bulk.courant;
  if (!(std::abs(c) < 1.0))
    throw std::invalid_argument("branch_points requires |courant| < 1");
  BranchPointSet out;
  if (bulk.kind == BulkKind::LeapFrog) {
    out.angle = 0.5 * std::acos(1.0 - 2.0 * c * c);
    const cplx e = std::polar(1.0, out.angle);
    out.points = {e, std::conj(e), -e, -std::conj(e)};
    out.inside_disk = false;
    return out;
  }
  if (bulk.kind == BulkKind::Dissipative) {
    const double w = bulk.omega;
    out.degenerate_quartic = std::abs(w - 2.0 / (1.0 + c)) < 1e-12;
    // y^2 + B y + (w-1)^2 with y = z^2.
    const cplx B = (c * c - 1.0) * w * w + 2.0 * (w - 1.0);
    const cplx disc = std::sqrt(B * B - 4.0 * std::pow(cplx(w - 1.0), 2));
    const cplx y0 = 0.5 * (-B + disc);
    const cplx y1 = 0.5 * (-B - disc);
    out.points = {std::sqrt(y0), -std::sqrt(y0), std::sqrt(y1), -std::sqrt(y1)};
    out.inside_disk = true;
    for (auto p : out.points)
      if (std::abs(p) >= 1.0 - 1e-12) out.inside_disk = false;
    return out;
  }
  throw std::invalid_argument("branch_points covers leap-frog and dissipative bulks");
}

const char* zone_name(Zone z) {
  switch (z) {
    case Zone::NearWall: return "near-wall";
    case Zone::Transition: return "transition";
    case Zone::Front: return "front";
    case Zone::AheadOfFront: return "ahead-of-front";
  }
  return "?";
}

cplx transition_sigma(const BulkScheme& bulk, double nu) {
  if (bulk.kind != BulkKind::LeapFrog)
    throw std::invalid_argument("transition_sigma is a leap-frog quantity");
  const double c = bulk.courant;
  if (!(nu > 0.0 && nu < std::abs(c)))
    throw std::invalid_argument("transition_sigma requires 0 < nu < |courant|");
  const double th = 0.5 * std::acos((1.0 + nu * nu - 2.0 * c * c) / (1.0 - nu * nu));
  const double xi =
      std::acos(-(nu / c) * std::sqrt((1.0 - c * c) / (1.0 - nu * nu)));
  const double s32 = std::pow((1.0 - c * c) / (1.0 - nu * nu), 1.5);
  auto e = [](double a) { return std::polar(1.0, a); };
  const cplx num = (2.0 * c * c - 1.0) * e(6.0 * th) + 3.0 * e(4.0 * th) +
                   3.0 * (2.0 * c * c - 1.0) * e(2.0 * th) + 1.0 +
                   8.0 * nu * nu * nu * e(3.0 * th) * s32;
  return -(1.0 + 1.0 / nu) * e(-2.0 * th) -
         e(xi - 6.0 * th) * num / (8.0 * c * nu * nu * s32);
}

SaddlePointSet saddle_points(const BulkScheme& bulk, double nu) {
  if (!(nu >= 0.0 && nu <= 1.0))
    throw std::invalid_argument("saddle_points requires 0 <= nu <= 1");
  const double c = bulk.courant;
  SaddlePointSet out;
  out.nu = nu;

  if (bulk.kind == BulkKind::Dissipative) {
    if (std::abs(nu - c) > 1e-12)
      throw std::invalid_argument(
          "dissipative saddle data is available at nu = courant only");
    out.zone = Zone::Front;
    out.points = {1.0, -1.0};
    out.kappa_at_points = {1.0, -1.0};
    out.second_derivative =
        2.0 / (c * c) * (1.0 / bulk.omega - 0.5) * (1.0 - c * c);
    out.degenerate = false;
    return out;
  }
  if (bulk.kind != BulkKind::LeapFrog)
    throw std::invalid_argument("saddle_points covers leap-frog and dissipative bulks");

  const double ac = std::abs(c);
  if (nu <= 1e-14) {
    out.zone = Zone::NearWall;  // no finite saddle points
    return out;
  }
  if (std::abs(nu - ac) <= 1e-12) {
    out.zone = Zone::Front;
    out.points = {1.0, -1.0};
    out.kappa_at_points = {-1.0, 1.0};
    out.second_derivative = 0.0;
    out.degenerate = true;
    return out;
  }
  if (nu < ac) {
    out.zone = Zone::Transition;
    out.theta_sp = 0.5 * std::acos((1.0 + nu * nu - 2.0 * c * c) / (1.0 - nu * nu));
    out.xi_sp = std::acos(-(nu / c) * std::sqrt((1.0 - c * c) / (1.0 - nu * nu)));
    const cplx e = std::polar(1.0, out.theta_sp);
    out.points = {e, std::conj(e), -std::conj(e), -e};
    // kappa_s(e^{+-i th}) = e^{-+i(xi - pi)}; kappa_s(e^{+-i(th - pi)}) = e^{-+i xi},
    // and -conj(e) = e^{-i(th - pi)}, -e = e^{i(th - pi)}.
    out.kappa_at_points = {std::polar(1.0, -(out.xi_sp - M_PI)),
                           std::polar(1.0, out.xi_sp - M_PI),
                           std::polar(1.0, out.xi_sp), std::polar(1.0, -out.xi_sp)};
    out.second_derivative = transition_sigma(bulk, nu);
    return out;
  }
  out.zone = Zone::AheadOfFront;
  if (nu >= 1.0 - 1e-14) return out;  // quartic degenerates at nu = 1
  // Real roots, two inside the disk and two outside, reciprocal in pairs:
  // z^2 = (2C^2 - nu^2 - 1 +- 2 sqrt((C^2-1)(C^2-nu^2))) / (nu^2 - 1).
  const double inner = (c * c - 1.0) * (c * c - nu * nu);
  for (int beta = 0; beta < 2; ++beta) {
    const double root =
        (2.0 * c * c - nu * nu - 1.0 + (beta ? -2.0 : 2.0) * std::sqrt(inner)) /
        (nu * nu - 1.0);
    const double z = std::sqrt(root);
    out.points.push_back(z);
    out.points.push_back(-z);
  }
  // sort: inside-disk pair first
  std::sort(out.points.begin(), out.points.end(),
            [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  for (auto p : out.points) {
    // Inside the disk the saddle pairs with the analytic continuation of
    // kappa_s, not with the small-modulus root; take the branch killing f'.
    const auto roots = kappa_roots(bulk, p);
    const cplx fp0 = f_prime_at(bulk, p, roots[0], nu);
    const cplx fp1 = f_prime_at(bulk, p, roots[1], nu);
    out.kappa_at_points.push_back(std::abs(fp0) <= std::abs(fp1) ? roots[0] : roots[1]);
  }
  return out;
}

cplx f_eval(const BulkScheme& bulk, cplx z, double nu) {
  if (z == cplx(0.0, 0.0)) throw std::invalid_argument("f undefined at z = 0");
  const cplx k = kappa_s(bulk, z);
  if (k == cplx(0.0, 0.0)) throw std::invalid_argument("f undefined where kappa_s = 0");
  return std::log(z) + nu * std::log(k);
}

cplx f_prime_at(const BulkScheme& bulk, cplx z, cplx kappa, double nu) {
  return 1.0 / z + nu * kappa_prime_at(bulk, z, kappa) / kappa;
}

cplx f_second_at(const BulkScheme& bulk, cplx z, cplx kappa, double nu) {
  const cplx kp = kappa_prime_at(bulk, z, kappa);
  const cplx kpp = kappa_second_at(bulk, z, kappa);
  return -1.0 / (z * z) + nu * (kpp * kappa - kp * kp) / (kappa * kappa);
}

cplx f_prime(const BulkScheme& bulk, cplx z, double nu) {
  return f_prime_at(bulk, shell_adjust(z), kappa_s(bulk, z), nu);
}

cplx f_second(const BulkScheme& bulk, cplx z, double nu) {
  return f_second_at(bulk, shell_adjust(z), kappa_s(bulk, z), nu);
}

cplx boundary_determinant_at(const BoundaryScheme& boundary, cplx z, cplx kappa) {
  cplx sb = 0, sbt = 0, kp = 1.0;
  const std::size_t top = boundary.support();
  for (std::size_t k = 0; k < top; ++k) {
    if (k < boundary.b.size()) sb += boundary.b[k] * kp;
    if (k < boundary.bt.size()) sbt += boundary.bt[k] * kp;
    kp *= kappa;
  }
  return z * z - z * sb - sbt;
}

cplx boundary_determinant(const BoundaryScheme& boundary, const BulkScheme& bulk, cplx z) {
  return boundary_determinant_at(boundary, z, kappa_s(bulk, z));
}

cplx boundary_determinant_prime(const BoundaryScheme& boundary, const BulkScheme& bulk,
                                cplx z) {
  z = shell_adjust(z);
  const cplx kappa = kappa_s(bulk, z);
  const cplx kp = kappa_prime_at(bulk, z, kappa);
  cplx sb = 0, sbt = 0, dsb = 0, dsbt = 0, kpow = 1.0, kpow_prev = 0.0;
  const std::size_t top = boundary.support();
  for (std::size_t k = 0; k < top; ++k) {
    if (k < boundary.b.size()) {
      sb += boundary.b[k] * kpow;
      if (k >= 1) dsb += boundary.b[k] * double(k) * kpow_prev;
    }
    if (k < boundary.bt.size()) {
      sbt += boundary.bt[k] * kpow;
      if (k >= 1) dsbt += boundary.bt[k] * double(k) * kpow_prev;
    }
    kpow_prev = kpow;
    kpow *= kappa;
  }
  return 2.0 * z - sb - z * dsb * kp - dsbt * kp;
}

cplx g_eval(const BoundaryScheme& boundary, const BulkScheme& bulk, cplx z) {
  const cplx d = boundary_determinant(boundary, bulk, z);
  // The radial-limit shell keeps |D| ~ |D'| * 1e-8 near an on-circle zero,
  // so the pole cutoff sits well above that scale.
  if (std::abs(d) < 1e-6)
    throw pole_error("boundary determinant vanishes (pole of g)", z);
  return 1.0 / (cplx(0.0, 2.0 * M_PI) * d);
}

ResidueValue residue_R(const BoundaryScheme& boundary, double courant) {
  const double first = 1.0 + boundary.sum_b() - boundary.sum_bt();
  if (std::abs(first) > 1e-12)
    throw std::invalid_argument(
        "residue_R: 1 + sum b - sum bt != 0, no simple zero at z = -1");
  const double second =
      2.0 + boundary.sum_b() + boundary.sum_k_b_minus_bt() / courant;
  if (std::abs(second) < 1e-12)
    throw std::invalid_argument(
        "residue_R: 2 + sum b + (1/C) sum k (b - bt) = 0, zero not simple");
  return {-1.0 / second};
}

}  // namespace fdw
