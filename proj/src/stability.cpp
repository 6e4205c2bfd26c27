#include "fdw/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace fdw {

const char* stability_class_name(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::UnstableSimpleZero: return "UnstableSimpleZero";
    case StabilityClass::UnstableUnitCircleZeros: return "UnstableUnitCircleZeros";
    case StabilityClass::GodunovRyabenkii: return "GodunovRyabenkii";
    case StabilityClass::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string StabilityVerdict::to_json() const {
  nlohmann::json j;
  j["class"] = stability_class_name(cls);
  j["zeros"] = nlohmann::json::array();
  for (const auto& z : zeros)
    j["zeros"].push_back({{"re", z.z.real()}, {"im", z.z.imag()}, {"multiplicity", z.multiplicity}});
  j["min_abs_D"] = min_abs_D;
  j["winding"] = winding;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

SimpleZeroCheck check_simple_zero_minus_one(const BoundaryScheme& boundary,
                                            double courant) {
  const double first = 1.0 + boundary.sum_b() - boundary.sum_bt();
  const double second =
      2.0 + boundary.sum_b() + boundary.sum_k_b_minus_bt() / courant;
  return {std::abs(first) <= 1e-12, std::abs(second) > 1e-12, first, second};
}

namespace {

// Counterclockwise winding of theta -> D((1+delta) e^{i theta}) around 0.
// Returns NaN when the phase is under-resolved at the given grid.
double image_winding(const BoundaryScheme& boundary, const BulkScheme& bulk,
                     double delta, int grid) {
  double total = 0.0;
  double prev_arg = std::arg(boundary_determinant(boundary, bulk, std::polar(1.0 + delta, 0.0)));
  for (int m = 1; m <= grid; ++m) {
    const double th = 2.0 * M_PI * m / grid;
    const double a = std::arg(boundary_determinant(boundary, bulk, std::polar(1.0 + delta, th)));
    double d = a - prev_arg;
    while (d > M_PI) d -= 2.0 * M_PI;
    while (d < -M_PI) d += 2.0 * M_PI;
    if (std::abs(d) > M_PI / 2.0) return std::nan("");
    total += d;
    prev_arg = a;
  }
  return total / (2.0 * M_PI);
}

double absD(const BoundaryScheme& boundary, const BulkScheme& bulk, double th) {
  return std::abs(boundary_determinant(boundary, bulk, std::polar(1.0, th)));
}

// Golden-section refinement of a local minimum of |D(e^{i theta})|.
double refine_min(const BoundaryScheme& boundary, const BulkScheme& bulk, double lo,
                  double hi) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = absD(boundary, bulk, c), fd = absD(boundary, bulk, d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = absD(boundary, bulk, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = absD(boundary, bulk, d);
    }
  }
  return 0.5 * (a + b);
}

// Local vanishing order of |D| at theta0 from a log-log slope.
int vanishing_order(const BoundaryScheme& boundary, const BulkScheme& bulk,
                    double theta0) {
  const double h1 = 1e-3, h2 = 1e-4;
  const double v1 = 0.5 * (absD(boundary, bulk, theta0 + h1) + absD(boundary, bulk, theta0 - h1));
  const double v2 = 0.5 * (absD(boundary, bulk, theta0 + h2) + absD(boundary, bulk, theta0 - h2));
  const double m = std::log(v1 / v2) / std::log(h1 / h2);
  return std::max(1, static_cast<int>(std::lround(m)));
}

// Newton search for an exterior zero, seeded from a coarse radius sweep.
bool locate_exterior_zero(const BoundaryScheme& boundary, const BulkScheme& bulk,
                          double delta, cplx& out) {
  cplx best_seed = 0;
  double best = std::numeric_limits<double>::max();
  for (double r = 1.0 + 10.0 * delta; r <= 10.0; r *= 1.15) {
    for (int m = 0; m < 512; ++m) {
      const cplx z = std::polar(r, 2.0 * M_PI * m / 512);
      const double v = std::abs(boundary_determinant(boundary, bulk, z));
      if (v < best) {
        best = v;
        best_seed = z;
      }
    }
  }
  cplx z = best_seed;
  for (int it = 0; it < 80; ++it) {
    const cplx d = boundary_determinant(boundary, bulk, z);
    if (std::abs(d) < 1e-11) {
      out = z;
      return std::abs(z) > 1.0 + delta;
    }
    const cplx dp = boundary_determinant_prime(boundary, bulk, z);
    if (std::abs(dp) < 1e-300) break;
    z -= d / dp;
    if (std::abs(z) < 1.0 + 0.5 * delta) z *= (1.0 + delta) / std::abs(z);
  }
  return false;
}

}  // namespace

StabilityVerdict classify(const BoundaryScheme& boundary, const BulkScheme& bulk,
                          double delta, int grid) {
  bulk.validate();
  boundary.validate();
  StabilityVerdict v;

  // (i) zeros strictly outside: pole order 2 at infinity minus image winding.
  double w = std::nan("");
  for (int g = grid;; g *= 2) {
    w = image_winding(boundary, bulk, delta, g);
    if (!std::isnan(w) || g >= (1 << 18)) break;
  }
  if (std::isnan(w)) {
    v.cls = StabilityClass::Indeterminate;
    v.note = "winding under-resolved at 2^18 samples";
    return v;
  }
  v.winding = w;
  if (std::abs(w - std::lround(w)) > 1e-6) {
    v.cls = StabilityClass::Indeterminate;
    v.note = "non-integer winding after quadrature";
    return v;
  }
  const int zeros_outside = 2 - static_cast<int>(std::lround(w));

  // (ii) unit-circle modulus scan with refinement.
  std::vector<double> theta(grid), mod(grid);
  for (int m = 0; m < grid; ++m) {
    theta[m] = 2.0 * M_PI * m / grid;
    mod[m] = absD(boundary, bulk, theta[m]);
  }
  v.min_abs_D = *std::min_element(mod.begin(), mod.end());

  std::vector<UnitZero> circle_zeros;
  for (int m = 0; m < grid; ++m) {
    const int l = (m + grid - 1) % grid, r = (m + 1) % grid;
    if (mod[m] <= mod[l] && mod[m] <= mod[r] && mod[m] < 1e-3) {
      const double th0 = theta[m] - 2.0 * M_PI / grid;
      const double th1 = theta[m] + 2.0 * M_PI / grid;
      const double th_star = refine_min(boundary, bulk, th0, th1);
      if (absD(boundary, bulk, th_star) < 1e-6) {
        bool dup = false;
        for (const auto& z : circle_zeros)
          if (std::abs(z.z - std::polar(1.0, th_star)) < 1e-6) dup = true;
        if (!dup)
          circle_zeros.push_back(
              {std::polar(1.0, th_star), vanishing_order(boundary, bulk, th_star)});
      }
    }
  }

  // (iii) exact checks at z = -1 and z = +1 override the scanned estimates.
  const auto mz = check_simple_zero_minus_one(boundary, bulk.courant);
  const double at_plus1 =
      1.0 - boundary.sum_alt_b() - boundary.sum_alt_bt();  // D(1), kappa_s(1) = -1
  auto snap = [&](cplx target, bool is_zero, int mult) {
    std::erase_if(circle_zeros,
                  [&](const UnitZero& z) { return std::abs(z.z - target) < 1e-5; });
    if (is_zero) circle_zeros.push_back({target, mult});
  };
  if (bulk.kind == BulkKind::LeapFrog) {
    snap(cplx(-1.0, 0.0), mz.holds_first, mz.holds_second ? 1 : 2);
    snap(cplx(1.0, 0.0), std::abs(at_plus1) <= 1e-12, 1);
  }

  if (zeros_outside > 0) {
    v.cls = StabilityClass::GodunovRyabenkii;
    cplx z;
    if (locate_exterior_zero(boundary, bulk, delta, z)) v.zeros.push_back({z, 1});
    v.note = std::to_string(zeros_outside) + " zero(s) outside the unit circle";
    return v;
  }

  if (circle_zeros.empty()) {
    v.cls = StabilityClass::Stable;
    return v;
  }
  v.zeros = circle_zeros;
  if (circle_zeros.size() == 1 && circle_zeros[0].multiplicity == 1 &&
      std::abs(std::abs(circle_zeros[0].z.real()) - 1.0) < 1e-9 &&
      std::abs(circle_zeros[0].z.imag()) < 1e-9) {
    v.cls = StabilityClass::UnstableSimpleZero;
  } else {
    v.cls = StabilityClass::UnstableUnitCircleZeros;
  }
  return v;
}

}  // namespace fdw
