#include "fdw/exact.hpp"

#include <stdexcept>

namespace fdw::exact {

Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

Rational half_binomial(long ell, long p) {
  if (p < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < p; ++i) {
    // (ell/2 - i) / (i + 1)
    r *= Rational(ell - 2 * i, 2 * (i + 1));
  }
  return r;
}

std::vector<Rational> beta_coeffs(const Rational& c, int r_max) {
  if (r_max < 1 || r_max > 80)
    throw std::invalid_argument("beta_coeffs supports 1 <= r_max <= 80");
  std::vector<Rational> beta(static_cast<std::size_t>(r_max) + 1, Rational(0));
  beta[1] = 1 + c;
  if (r_max >= 2) beta[2] = -c * c;
  const Rational base = 2 * (2 * c * c - 1);
  for (int r = 2; 2 * r <= r_max; ++r) {
    Rational sum = 0;
    for (long p = (r + 1) / 2; p <= r; ++p) {
      Rational pw = 1;
      for (long e = 0; e < 2 * p - r; ++e) pw *= base;
      sum += half_binomial(1, p) * binomial(p, r - p) * pw;
    }
    beta[static_cast<std::size_t>(2 * r)] = -sum / 2;
  }
  return beta;
}

namespace {

// Coefficients 0..m of 1/(1 - B(x)) where B(x) = sum_{r>=1} beta_r x^r.
std::vector<Rational> composition_series(const std::vector<Rational>& beta, int m) {
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1, Rational(0));
  g[0] = 1;
  for (int i = 1; i <= m; ++i) {
    Rational acc = 0;
    for (int r = 1; r <= i && r < static_cast<int>(beta.size()); ++r)
      acc += beta[static_cast<std::size_t>(r)] * g[static_cast<std::size_t>(i - r)];
    g[static_cast<std::size_t>(i)] = acc;
  }
  return g;
}

}  // namespace

Rational upwind_explicit(const Rational& c, int n, int j) {
  if (n < 0 || n > 20 || j < 0 || j > n)
    throw std::invalid_argument("upwind_explicit supports 0 <= j <= n <= 20");
  if (n == 0) return 0;
  if (n == 1) return j == 0 ? Rational(1) : Rational(0);

  const int m_top = n + j - 1;
  const auto beta = beta_coeffs(c, m_top);
  const auto comp = composition_series(beta, m_top);
  const Rational base = 2 * (2 * c * c - 1);

  Rational inv2c_j = 1;
  for (int i = 0; i < j; ++i) inv2c_j /= 2 * c;

  Rational total = 0;
  for (int k = j; 2 * k <= n + j - 1; ++k) {
    Rational factor = 0;
    for (int ell = 0; ell <= j; ++ell) {
      for (int s = 0; s <= j - ell; ++s) {
        for (long p = (k - s + 1) / 2; p <= k - s; ++p) {
          Rational pw = 1;
          for (long e = 0; e < 2 * p - k + s; ++e) pw *= base;
          Rational term = binomial(j, ell) * binomial(j - ell, s) *
                          half_binomial(ell, p) * binomial(p, k - s - p) * pw;
          if ((j - ell - s) % 2) term = -term;
          factor += term;
        }
      }
    }
    total += factor * comp[static_cast<std::size_t>(n + j - 2 * k - 1)];
  }
  return total * inv2c_j;
}

std::vector<std::vector<Rational>> simulate_error_exact(
    BulkKind kind, const Rational& c, const std::vector<Rational>& b,
    const std::vector<Rational>& bt, int n_max) {
  if (n_max < 1 || n_max > 200)
    throw std::invalid_argument("simulate_error_exact supports 1 <= n_max <= 200");
  const std::size_t len = static_cast<std::size_t>(n_max) + 3;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  rows.emplace_back(len + 1, Rational(0));
  rows.emplace_back(len + 1, Rational(0));
  rows[1][0] = 1;

  for (int n = 1; n < n_max; ++n) {
    const auto& prev = rows[static_cast<std::size_t>(n) - 1];
    const auto& cur = rows[static_cast<std::size_t>(n)];
    std::vector<Rational> next(len + 1, Rational(0));
    for (std::size_t k = 0; k < b.size(); ++k) next[0] += b[k] * cur[k];
    for (std::size_t k = 0; k < bt.size(); ++k) next[0] += bt[k] * prev[k];
    for (std::size_t j = 1; j < len; ++j) {
      switch (kind) {
        case BulkKind::LeapFrog:
          next[j] = prev[j] + c * (cur[j - 1] - cur[j + 1]);
          break;
        case BulkKind::ManufacturedDissipative:
          next[j] = prev[j] + c * (cur[j - 1] - cur[j + 1]) +
                    c * (1 - c) * (prev[j - 1] - 2 * prev[j] + prev[j + 1]);
          break;
        case BulkKind::Dissipative:
          throw std::invalid_argument("exact mode covers leap-frog and manufactured bulks");
      }
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

Rational manufactured_closed_form_exact(const Rational& c, int n, int j) {
  if (n < 2 || j < 1) throw std::invalid_argument("closed form needs n >= 2, j >= 1");
  if (j > n - 1) return 0;
  Rational pw = c;
  for (int i = 0; i < j - 1; ++i) pw *= c;
  for (int i = 0; i < n - 1 - j; ++i) pw *= (1 - c);
  return pw * binomial(n - 2, j - 1);
}

}  // namespace fdw::exact
