#pragma once

#include <string>
#include <vector>

#include "fdw/complex_analysis.hpp"
#include "fdw/schemes.hpp"
#include "fdw/util.hpp"

namespace fdw {

enum class StabilityClass {
  Stable,
  UnstableSimpleZero,        // one simple zero at z = -1 (or +1)
  UnstableUnitCircleZeros,   // other unit-circle zeros / higher multiplicity
  GodunovRyabenkii,          // a zero strictly outside the unit circle
  Indeterminate,
};

const char* stability_class_name(StabilityClass c);

struct UnitZero {
  cplx z;
  int multiplicity = 1;
};

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::Indeterminate;
  std::vector<UnitZero> zeros;
  double min_abs_D = 0;   // over the unit-circle scan
  double winding = 0;     // image winding of D on |z| = 1 + delta
  std::string note;

  std::string to_json() const;
};

struct SimpleZeroCheck {
  bool holds_first;    // 1 + sum b - sum bt == 0
  bool holds_second;   // 2 + sum b + (1/C) sum k (b - bt) != 0
  double first_value;
  double second_value;
};

/// The two algebraic identities characterizing a simple zero of the
/// boundary determinant at z = -1.
SimpleZeroCheck check_simple_zero_minus_one(const BoundaryScheme& boundary,
                                            double courant);

/// Classifies the boundary determinant D over the closed exterior of the
/// unit disk: an exterior winding count on |z| = 1 + delta (zeros strictly
/// outside), a modulus scan on the circle with local refinement (unit-circle
/// zeros, multiplicity from the local vanishing order), and the exact
/// z = +-1 identities.
StabilityVerdict classify(const BoundaryScheme& boundary, const BulkScheme& bulk,
                          double delta = 1e-3, int grid = 1 << 14);

}  // namespace fdw
