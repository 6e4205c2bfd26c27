#include "fdw/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdw {

int default_window(const BoundaryScheme& boundary, int n_max) {
  return n_max + static_cast<int>(std::max<std::size_t>(boundary.support(), 2));
}

void simulate_error_rows(const BulkScheme& bulk, const BoundaryScheme& boundary,
                         int n_max, int j_max,
                         const std::function<void(int, std::span<const double>)>& on_row,
                         double corner_amplitude) {
  bulk.validate();
  boundary.validate();
  if (n_max < 1) throw std::invalid_argument("simulate_error requires n_max >= 1");
  if (j_max < static_cast<int>(boundary.support()))
    throw std::invalid_argument("window too small for the boundary stencil");

  const double c = bulk.courant;
  const double w = bulk.omega;
  const std::size_t len = static_cast<std::size_t>(j_max) + 1;

  // Rows carry one ghost cell so the bulk stencil never branches.
  std::vector<double> prev(len + 1, 0.0), cur(len + 1, 0.0), next(len + 1, 0.0);
  cur[0] = corner_amplitude;

  on_row(0, std::span<const double>(prev.data(), len));
  on_row(1, std::span<const double>(cur.data(), len));

  for (int n = 1; n < n_max; ++n) {
    double b0 = 0.0;
    for (std::size_t k = 0; k < boundary.b.size(); ++k) b0 += boundary.b[k] * cur[k];
    for (std::size_t k = 0; k < boundary.bt.size(); ++k) b0 += boundary.bt[k] * prev[k];
    next[0] = b0;

    switch (bulk.kind) {
      case BulkKind::LeapFrog:
        for (std::size_t j = 1; j < len; ++j)
          next[j] = prev[j] + c * (cur[j - 1] - cur[j + 1]);
        break;
      case BulkKind::Dissipative:
        for (std::size_t j = 1; j < len; ++j)
          next[j] = 0.5 * (2.0 - w) * (cur[j - 1] + cur[j + 1]) + (w - 1.0) * prev[j] +
                    0.5 * w * c * (cur[j - 1] - cur[j + 1]);
        break;
      case BulkKind::ManufacturedDissipative:
        for (std::size_t j = 1; j < len; ++j)
          next[j] = prev[j] + c * (cur[j - 1] - cur[j + 1]) +
                    c * (1.0 - c) * (prev[j - 1] - 2.0 * prev[j] + prev[j + 1]);
        break;
    }
    next[len] = 0.0;

    std::swap(prev, cur);
    std::swap(cur, next);
    on_row(n + 1, std::span<const double>(cur.data(), len));
  }
}

std::vector<ErrorField> simulate_error(const BulkScheme& bulk,
                                       const BoundaryScheme& boundary, int n_max,
                                       int j_max, SimulateOptions opts) {
  if (n_max < 1) throw std::invalid_argument("simulate_error requires n_max >= 1");
  if (j_max < 0) j_max = default_window(boundary, n_max);
  if (j_max < n_max && !opts.allow_truncation)
    throw std::invalid_argument(
        "j_max < n_max clips the support; set allow_truncation to force");

  std::vector<int> want = opts.snapshots.empty() ? std::vector<int>{n_max} : opts.snapshots;
  for (int n : want)
    if (n < 0 || n > n_max)
      throw std::invalid_argument("snapshot index outside [0, n_max]");

  std::vector<ErrorField> out;
  out.reserve(want.size());
  simulate_error_rows(
      bulk, boundary, n_max, j_max,
      [&](int n, std::span<const double> row) {
        for (int m : want)
          if (m == n) out.push_back({n, std::vector<double>(row.begin(), row.end()), {}});
      },
      opts.corner_amplitude);

  // Preserve the caller's snapshot order.
  std::vector<ErrorField> ordered;
  ordered.reserve(want.size());
  for (int m : want)
    for (auto& f : out)
      if (f.time_index == m) ordered.push_back(f);
  return ordered;
}

double manufactured_closed_form(double c, int n, int j) {
  if (n < 2 || j < 1) throw std::invalid_argument("closed form needs n >= 2, j >= 1");
  if (j > n - 1) return 0.0;
  double binom = 1.0;
  for (int i = 0; i < j - 1; ++i)
    binom = binom * double(n - 2 - i) / double(i + 1);
  return c * std::pow(c, j - 1) * std::pow(1.0 - c, n - 1 - j) * binom;
}

PdeSolution simulate_pde(const BoundaryScheme& boundary, const CornerScheme& corner,
                         const std::function<double(double)>& initial_datum,
                         double dx, double courant, double t_final) {
  boundary.validate();
  corner.validate();
  if (!(dx > 0)) throw std::invalid_argument("dx must be positive");
  if (!(courant > -1.0 && courant < 0.0))
    throw std::invalid_argument("pde simulation requires -1 < courant < 0 (outflow)");
  if (!(t_final > 0)) throw std::invalid_argument("t_final must be positive");

  const double a = -1.0;
  const double dt = courant * dx / a;  // = |C| dx
  const int steps = std::max(1, static_cast<int>(std::llround(t_final / dt)));
  const double t_end = steps * dt;
  auto exact = [&](double t, double x) { return initial_datum(x - a * t); };

  // Numerical signal travels one cell per step; size the mesh so the right
  // edge stays causally disconnected from [0, 1].
  const int j_unit = static_cast<int>(std::floor(1.0 / dx + 1e-9));
  const int j_total = j_unit + steps + 2;

  std::vector<double> prev(j_total + 1), cur(j_total + 1), next(j_total + 1);
  for (int j = 0; j <= j_total; ++j) prev[j] = initial_datum(j * dx);

  // First row: corner scheme at j = 0, initialization scheme in the bulk.
  {
    double v = 0;
    for (std::size_t k = 0; k < corner.c.size(); ++k) v += corner.c[k] * prev[k];
    cur[0] = v;
  }
  for (int j = 1; j < j_total; ++j) {
    double v = corner.s_minus1 * prev[j - 1];
    for (std::size_t k = 0; k < corner.s.size(); ++k) {
      int jj = j + static_cast<int>(k);
      v += corner.s[k] * (jj <= j_total ? prev[jj] : exact(0.0, jj * dx));
    }
    cur[j] = v;
  }
  cur[j_total] = exact(dt, j_total * dx);

  const double c = courant;
  for (int n = 1; n < steps; ++n) {
    double b0 = 0;
    for (std::size_t k = 0; k < boundary.b.size(); ++k) b0 += boundary.b[k] * cur[k];
    for (std::size_t k = 0; k < boundary.bt.size(); ++k) b0 += boundary.bt[k] * prev[k];
    next[0] = b0;
    for (int j = 1; j < j_total; ++j)
      next[j] = prev[j] + c * (cur[j - 1] - cur[j + 1]);
    next[j_total] = exact((n + 1) * dt, j_total * dx);
    std::swap(prev, cur);
    std::swap(cur, next);
  }

  PdeSolution sol;
  sol.dx = dx;
  sol.dt = dt;
  sol.steps = steps;
  sol.t_final = t_end;
  sol.u.time_index = steps;
  sol.u.dx = dx;
  sol.e.time_index = steps;
  sol.e.dx = dx;
  sol.u.values.resize(j_unit + 1);
  sol.e.values.resize(j_unit + 1);
  for (int j = 0; j <= j_unit; ++j) {
    sol.u.values[j] = cur[j];
    sol.e.values[j] = exact(t_end, j * dx) - cur[j];
  }
  return sol;
}

}  // namespace fdw
