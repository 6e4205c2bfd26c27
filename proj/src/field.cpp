#include "fdw/field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdw {

double lp_norm(const ErrorField& field, double p, bool scaled) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm requires p >= 1");
  if (std::isinf(p)) {
    double m = 0;
    for (double v : field.values) m = std::max(m, std::abs(v));
    return m;
  }
  if (scaled && !field.dx)
    throw std::invalid_argument("scaled lp_norm requires dx");
  double s = 0;
  if (p == 2.0) {
    for (double v : field.values) s += v * v;
  } else if (p == 1.0) {
    for (double v : field.values) s += std::abs(v);
  } else {
    for (double v : field.values) s += std::pow(std::abs(v), p);
  }
  if (scaled) s *= *field.dx;
  return std::pow(s, 1.0 / p);
}

double moments(const ErrorField& field, int order, bool alternating) {
  if (order != 0 && order != 1)
    throw std::invalid_argument("moments supports order 0 or 1");
  double s = 0;
  for (std::size_t j = 0; j < field.values.size(); ++j) {
    double w = order == 0 ? 1.0 : double(j);
    if (alternating && (j % 2)) w = -w;
    s += w * field.values[j];
  }
  return s;
}

}  // namespace fdw
