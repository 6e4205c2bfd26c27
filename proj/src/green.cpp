#include "fdw/green.hpp"

#include <cmath>
#include <stdexcept>

#include "fdw/special.hpp"

namespace fdw {

namespace {

void check_courant(double c) {
  if (!(std::abs(c) < 1.0) || c == 0.0)
    throw std::invalid_argument("green functions require 0 < |courant| < 1");
}

}  // namespace

void green_simulate_rows(
    double c, GreenKind which, int n_max,
    const std::function<void(int, int, std::span<const double>)>& on_row) {
  check_courant(c);
  if (n_max < 1) throw std::invalid_argument("green_simulate requires n_max >= 1");

  const int J = n_max + 2;           // support stays within |j| <= n
  const std::size_t len = 2 * static_cast<std::size_t>(J) + 1;
  std::vector<double> prev(len + 2, 0.0), cur(len + 2, 0.0), next(len + 2, 0.0);
  // Storage index i = j + J + 1 (one ghost cell each side).
  if (which == GreenKind::First)
    prev[static_cast<std::size_t>(J) + 1] = 1.0;
  else
    cur[static_cast<std::size_t>(J) + 1] = 1.0;

  on_row(0, -J, std::span<const double>(prev.data() + 1, len));
  on_row(1, -J, std::span<const double>(cur.data() + 1, len));
  for (int n = 1; n < n_max; ++n) {
    for (std::size_t i = 1; i <= len; ++i)
      next[i] = prev[i] + c * (cur[i - 1] - cur[i + 1]);
    std::swap(prev, cur);
    std::swap(cur, next);
    on_row(n + 1, -J, std::span<const double>(cur.data() + 1, len));
  }
}

std::vector<GreenField> green_simulate(double c, GreenKind which, int n_max,
                                       std::vector<int> snapshots) {
  if (snapshots.empty()) snapshots = {n_max};
  std::vector<GreenField> out;
  green_simulate_rows(c, which, n_max, [&](int n, int j_min, std::span<const double> row) {
    for (int m : snapshots)
      if (m == n)
        out.push_back({which, n, j_min, std::vector<double>(row.begin(), row.end())});
  });
  return out;
}

cplx green_fourier(double c, int n, double xi) {
  check_courant(c);
  const double ph = std::asin(c * std::sin(xi));
  const double root = std::sqrt(1.0 - c * c * std::sin(xi) * std::sin(xi));
  const double sn = (n % 2) ? 1.0 : -1.0;  // (-1)^{n+1}
  const cplx val = std::polar(1.0, -double(n) * ph) + sn * std::polar(1.0, double(n) * ph);
  return val / (2.0 * root * std::sqrt(2.0 * M_PI));
}

cplx green_fourier_chebyshev(double c, int n, double xi) {
  check_courant(c);
  const double root = std::sqrt(1.0 - c * c * std::sin(xi) * std::sin(xi));
  const double even = (n % 2) ? 0.0 : 1.0;
  const double odd = (n % 2) ? 1.0 : 0.0;
  cplx val = even * chebyshev(ChebyshevKind::T, n, root) / root;
  if (n >= 1)
    val += cplx(0.0, 1.0) * odd * c * std::sin(xi) *
           chebyshev(ChebyshevKind::U, n - 1, root) / root;
  return val / std::sqrt(2.0 * M_PI);
}

double green_fourier_deviation(double c, int n, int n_xi) {
  double dev = 0;
  for (int m = 0; m < n_xi; ++m) {
    const double xi = -M_PI + 2.0 * M_PI * m / n_xi;
    dev = std::max(dev, std::abs(green_fourier(c, n, xi) - green_fourier_chebyshev(c, n, xi)));
  }
  return dev;
}

double green_transition_predict(double c, int n, int j) {
  check_courant(c);
  const double nu = double(j) / n;
  const double r = double(j) / (c * n);
  if (!(std::abs(nu) <= std::abs(c) - 1e-3))
    throw std::invalid_argument("green transition requires |j/n| <= |courant| - 1e-3");

  const double env = std::pow(1.0 - r * r, -0.25);
  const double common = std::sqrt((1.0 - r * r) / (1.0 - nu * nu));
  const double A = double(n) * std::asin(c * common);
  const double inner = std::sqrt((1.0 - c * c) / (1.0 - nu * nu));
  const double B1 = double(j) * std::acos(r * inner);
  const double B2 = double(j) * std::acos(-r * inner);
  const double s = 0.25 * M_PI * (c > 0 ? 1.0 : -1.0);
  const double sn = (n % 2) ? -1.0 : 1.0;
  return (std::cos(A - B1 - s) - sn * std::cos(A + B2 - s)) * env /
         (std::sqrt(2.0 * M_PI * double(n) * std::abs(c)) * std::pow(1.0 - c * c, 0.25));
}

double green_front_predict(double c, int n, int j, FrontSide side) {
  if (!(c > -1.0 && c < 0.0))
    throw std::invalid_argument("green front profiles assume -1 < courant < 0");
  const double w = std::cbrt(0.5 * c * (c * c - 1.0) * n);
  const double mask = ((n + j) % 2) ? 1.0 : 0.0;  // |((-1)^n - (-1)^j)/2|
  if (side == FrontSide::Spurious) {
    const double sn = (n % 2) ? 1.0 : -1.0;  // (-1)^{n+1}
    return sn * mask * airy_ai((double(j) + c * n) / w) / w;
  }
  return mask * airy_ai(-(double(j) - c * n) / w) / w;
}

double green_l2_limit(double c) {
  check_courant(c);
  return 1.0 / (std::sqrt(2.0) * std::pow(1.0 - c * c, 0.25));
}

double green_l2_series(double c, int n) {
  double out = 0;
  green_simulate_rows(c, GreenKind::Second, n, [&](int m, int, std::span<const double> row) {
    if (m == n) {
      double s = 0;
      for (double v : row) s += v * v;
      out = std::sqrt(s);
    }
  });
  return out;
}

TraceDivergence trace_divergence(double c, int N) {
  check_courant(c);
  if (N < 1000) throw std::invalid_argument("trace_divergence requires N >= 1000");
  std::vector<double> partial(static_cast<std::size_t>(N) + 1, 0.0);
  double acc = 0;
  green_simulate_rows(c, GreenKind::Second, N, [&](int n, int j_min, std::span<const double> row) {
    const double v = row[static_cast<std::size_t>(-j_min)];
    acc += v * v;
    partial[static_cast<std::size_t>(n)] = acc;
  });

  // Least squares of partial_sum against ln n over the last decade.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  long cnt = 0;
  for (int n = N / 10; n <= N; ++n) {
    const double x = std::log(double(n));
    const double y = partial[static_cast<std::size_t>(n)];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  return {partial[static_cast<std::size_t>(N)], slope};
}

double trace_log_coefficient_formula(double c) {
  check_courant(c);
  return 1.0 / (M_PI * std::abs(c) * std::sqrt(1.0 - c * c));
}

double trace_log_coefficient_observed(double c) {
  return 0.5 * trace_log_coefficient_formula(c);
}

std::vector<GreenSaddle> green_saddle_points(double c, double nu) {
  check_courant(c);
  if (!(std::abs(nu) <= 1.0))
    throw std::invalid_argument("green_saddle_points requires |nu| <= 1");
  std::vector<GreenSaddle> out;
  if (std::abs(nu) > std::abs(c)) return out;  // no stationary points

  const double arg = (nu / c) * std::sqrt((1.0 - c * c) / (1.0 - nu * nu));
  const double base = (1.0 - nu * nu) * std::sqrt(std::max(0.0, c * c - nu * nu)) /
                      std::sqrt(1.0 - c * c);
  const double sgn_c = c > 0 ? 1.0 : -1.0;
  for (int which = 0; which < 2; ++which) {          // f_- (physical), f_+ (spurious)
    const double pm = which == 0 ? -1.0 : 1.0;       // sign in nu xi +- asin(...)
    for (int r = 0; r < 2; ++r) {
      const double xi = (r ? -1.0 : 1.0) * std::acos(-pm * arg);
      const double f2 = pm * (r ? -1.0 : 1.0) * sgn_c * base;
      out.push_back({xi, f2, which == 0 ? FrontSide::Physical : FrontSide::Spurious});
    }
  }
  return out;
}

}  // namespace fdw
