#pragma once

#include <functional>

namespace fdw {

/// Airy function Ai on [-40, 40].
///
/// Three regimes: the Maclaurin pair series on (-8, 4); the large-negative
/// trigonometric expansion for x <= -8; and for x >= 4 the exact
/// representation Ai(x) = e^{-z}/pi int_0^inf e^{-sqrt(x) s^2} cos(s^3/3) ds
/// with z = (2/3) x^{3/2}, integrated by composite Gauss-Legendre. The
/// Maclaurin/asymptotic pair alone cannot hold 1e-9 relative accuracy on
/// (4, 6.5): the pair series loses ~|Bi/Ai| ~ 1e13 digits to cancellation
/// by x = 8 while the asymptotic error floor e^{-2 zeta} is still ~1e-7
/// at x = 5.
double airy_ai(double x);

/// int_0^x Ai(t) dt. Accepts +infinity (exactly 1/3). For large positive x
/// computed as 1/3 minus a finite-window tail integral of airy_ai.
double airy_primitive(double x);

enum class ChebyshevKind { T, U };

/// Chebyshev polynomial by the three-term recurrence; |x| <= 1 + 1e-12.
double chebyshev(ChebyshevKind kind, int n, double x);

/// Adaptive Simpson quadrature with Richardson correction.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

}  // namespace fdw
