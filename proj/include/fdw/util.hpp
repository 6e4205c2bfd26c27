#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace fdw {

using cplx = std::complex<double>;

/// Raised when an internal numerical diagnostic fails (branch selection,
/// quadrature residue, dual-path disagreement). The CLI maps this to a
/// dedicated exit code, distinct from input-validation errors.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" (exact fraction) or a plain decimal literal.
double parse_ratio(const std::string& s);

/// Parses "p/q" into integers; returns false if `s` is not of that form.
bool parse_fraction(const std::string& s, long long& p, long long& q);

/// 17 significant digits, round-trippable.
std::string format_double(double v);

/// Number of worker threads: min(hardware_concurrency, FDW_THREADS if set).
std::size_t thread_budget();

/// Blocked parallel map over [0, n). Results must be written to disjoint
/// slots so the outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fdw
