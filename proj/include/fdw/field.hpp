#pragma once

#include <optional>
#include <vector>

namespace fdw {

/// One time row eps_j^n over j = 0..J.
struct ErrorField {
  int time_index = 0;
  std::vector<double> values;
  std::optional<double> dx;  // mesh size, required for scaled norms
};

/// ell^p norm of the row; `scaled` multiplies by dx^{1/p} (ell^p(dx N)).
/// p = infinity gives the sup norm (scaling is a no-op there).
double lp_norm(const ErrorField& field, double p, bool scaled = false);

/// sum_j j^order (-1)^{j * alternating} eps_j, order in {0, 1}.
double moments(const ErrorField& field, int order, bool alternating = false);

}  // namespace fdw
