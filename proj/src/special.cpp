#include "fdw/special.hpp"

#include <array>
#include <mutex>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdw {

namespace {

constexpr double kAi0 = 0.35502805388781723926;    // 1/(3^{2/3} Gamma(2/3))
constexpr double kAiPrime0 = -0.25881940379280679840;  // -1/(3^{1/3} Gamma(1/3))

double ai_maclaurin(double x) {
  const double x3 = x * x * x;
  double f = 1.0, g = x, tf = 1.0, tg = x;
  for (int k = 1; k < 300; ++k) {
    tf *= x3 / (double(3 * k) * double(3 * k - 1));
    tg *= x3 / (double(3 * k + 1) * double(3 * k));
    f += tf;
    g += tg;
    if (std::abs(tf) + std::abs(tg) < 1e-19 * (std::abs(f) + std::abs(g))) break;
  }
  return kAi0 * f + kAiPrime0 * g;
}

// Poincare coefficients u_k of the Airy expansions.
std::array<double, 26> airy_u() {
  std::array<double, 26> u{};
  u[0] = 1.0;
  for (int k = 0; k + 1 < static_cast<int>(u.size()); ++k)
    u[k + 1] = u[k] * ((3 * k + 2.5) * (3 * k + 1.5) * (3 * k + 0.5)) /
               (54.0 * (k + 1) * (k + 0.5));
  return u;
}

double ai_negative_asymptotic(double x) {
  static const auto u = airy_u();
  const double y = -x;
  const double zeta = 2.0 / 3.0 * std::pow(y, 1.5);
  double P = 0.0, Q = 0.0, prev = std::numeric_limits<double>::max();
  for (int k = 0; 2 * k + 1 < static_cast<int>(u.size()); ++k) {
    const double tP = u[2 * k] * std::pow(zeta, -2.0 * k);
    if (tP > prev) break;  // divergent tail reached
    prev = tP;
    const double sgn = (k % 2) ? -1.0 : 1.0;
    P += sgn * tP;
    Q += sgn * u[2 * k + 1] * std::pow(zeta, -2.0 * k - 1.0);
  }
  const double ph = zeta - M_PI / 4.0;
  return (std::cos(ph) * P + std::sin(ph) * Q) / (std::sqrt(M_PI) * std::pow(y, 0.25));
}

// 24-point Gauss-Legendre nodes/weights on [-1, 1].
struct GL24 {
  std::array<double, 24> x{}, w{};
  GL24() {
    // Newton iteration on Legendre P_24.
    const int n = 24;
    for (int i = 0; i < n / 2; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-16) break;
      }
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      x[i] = -t;
      x[n - 1 - i] = t;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

double ai_damped_integral(double x) {
  static const GL24 gl;
  const double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  const double rx = std::sqrt(x);
  const double s_max = std::sqrt(46.0 / rx) + 1.0;
  double total = 0.0, s0 = 0.0;
  while (s0 < s_max) {
    const double width = std::min(0.5, 4.0 / (1.0 + s0 * s0));
    const double s1 = std::min(s0 + width, s_max);
    const double mid = 0.5 * (s0 + s1), half = 0.5 * (s1 - s0);
    double acc = 0.0;
    for (int i = 0; i < 24; ++i) {
      const double s = mid + half * gl.x[i];
      acc += gl.w[i] * std::exp(-rx * s * s) * std::cos(s * s * s / 3.0);
    }
    total += half * acc;
    s0 = s1;
  }
  return std::exp(-zeta) / M_PI * total;
}

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth > 24 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  // Keep the per-half tolerance above roundoff, or the criterion can
  // become unsatisfiable and the recursion degenerates.
  const double half_tol = std::max(0.5 * tol, 5e-17);
  return simpson_rec(f, a, m, fa, flm, fm, left, half_tol, depth + 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, half_tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

double airy_ai(double x) {
  if (!(x >= -40.0 && x <= 40.0))
    throw std::invalid_argument("airy_ai supports x in [-40, 40]");
  if (x <= -8.0) return ai_negative_asymptotic(x);
  if (x < 4.0) return ai_maclaurin(x);
  return ai_damped_integral(x);
}

double airy_primitive(double x) {
  if (std::isinf(x) && x > 0) return 1.0 / 3.0;
  if (!(x >= -40.0))
    throw std::invalid_argument("airy_primitive supports x in [-40, +inf]");
  if (x > 40.0) return 1.0 / 3.0;  // tail below 1e-60
  if (x == 0.0) return 0.0;
  if (x >= 6.0) {
    // 1/3 minus a finite tail window; Ai(x+16) < 1e-20 Ai(x).
    const double tail =
        adaptive_simpson([](double t) { return airy_ai(t); }, x,
                         std::min(x + 16.0, 40.0), 1e-13);
    return 1.0 / 3.0 - tail;
  }

  // Cached integrals over the unit panels [k, k+1], filled on demand.
  static std::mutex mtx;
  static std::array<double, 80> panel{};
  static std::array<bool, 80> ready{};
  auto panel_value = [&](int k) {
    const std::size_t idx = static_cast<std::size_t>(k + 40);
    std::lock_guard<std::mutex> lock(mtx);
    if (!ready[idx]) {
      panel[idx] = adaptive_simpson([](double t) { return airy_ai(t); }, double(k),
                                    double(k) + 1.0, 1e-13);
      ready[idx] = true;
    }
    return panel[idx];
  };

  double acc = 0.0;
  if (x > 0.0) {
    int k = 0;
    for (; k + 1 <= static_cast<int>(std::floor(x)); ++k) acc += panel_value(k);
    acc += adaptive_simpson([](double t) { return airy_ai(t); }, double(k), x, 1e-13);
  } else {
    int k = 0;
    for (; k - 1 >= static_cast<int>(std::ceil(x)); --k) acc -= panel_value(k - 1);
    acc -= adaptive_simpson([](double t) { return airy_ai(t); }, x, double(k), 1e-13);
  }
  return acc;
}

double chebyshev(ChebyshevKind kind, int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev requires n >= 0");
  if (!(std::abs(x) <= 1.0 + 1e-12))
    throw std::invalid_argument("chebyshev requires |x| <= 1 + 1e-12");
  double prev = 1.0;                                  // T_0 = U_0 = 1
  double cur = (kind == ChebyshevKind::T) ? x : 2.0 * x;  // T_1 / U_1
  if (n == 0) return prev;
  if (n == 1) return cur;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace fdw
