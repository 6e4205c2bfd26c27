#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fdw/schemes.hpp"

namespace fdw::exact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer numerator(const Rational& r);
Integer denominator(const Rational& r);

/// binom(n, k) for integer n >= 0.
Rational binomial(long n, long k);

/// Generalized binom(ell/2, p), half-integer upper argument.
Rational half_binomial(long ell, long p);

/// Boundary transfer coefficients of the upwind closed form:
/// beta_1 = 1+C, beta_2 = -C^2, beta_{2r-1} = 0 and
/// beta_{2r} = -1/2 sum_p binom(1/2,p) binom(p,r-p) (2(2C^2-1))^{2p-r}, r >= 2.
/// Returned vector is indexed so that result[r] = beta_r, result[0] unused.
std::vector<Rational> beta_coeffs(const Rational& courant, int r_max);

/// Exact eps_j^n for the leap-frog scheme with the upwind boundary, via the
/// non-recurrent composition-sum expression. Supported for 0 <= n <= 20.
/// Composition sums are evaluated as power-series coefficients of
/// 1/(1 - sum_r beta_r x^r), not by tuple enumeration.
Rational upwind_explicit(const Rational& courant, int n, int j);

/// Rational-arithmetic replica of the corner-source error recurrence.
/// Returns all rows 0..n_max (row n has entries j = 0..n_max+2).
std::vector<std::vector<Rational>> simulate_error_exact(
    BulkKind kind, const Rational& courant, const std::vector<Rational>& b,
    const std::vector<Rational>& bt, int n_max);

/// Exact binomial closed form of the manufactured scheme (n >= 2, j >= 1).
Rational manufactured_closed_form_exact(const Rational& courant, int n, int j);

}  // namespace fdw::exact
