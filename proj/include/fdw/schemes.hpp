#pragma once

#include <string>
#include <vector>

namespace fdw {

/// Largest stored coefficient support for boundary/corner schemes.
inline constexpr std::size_t kMaxSupport = 64;

enum class BulkKind { LeapFrog, Dissipative, ManufacturedDissipative };

/// Interior two-step update rule plus its parameters.
///
/// LeapFrog:      u_j^{n+1} = u_j^{n-1} + C (u_{j-1}^n - u_{j+1}^n)
/// Dissipative:   u_j^{n+1} = (2-w)/2 (u_{j-1}^n + u_{j+1}^n) + (w-1) u_j^{n-1}
///                            + wC/2 (u_{j-1}^n - u_{j+1}^n)
/// ManufacturedDissipative: leap-frog plus C(1-C) times the three-point
///                Laplacian of the n-1 row.
struct BulkScheme {
  BulkKind kind = BulkKind::LeapFrog;
  double courant = -0.5;
  double omega = 0.0;           // Dissipative only
  bool courant_override = false;  // skip the leap-frog outflow range check

  static BulkScheme leap_frog(double courant, bool override_range = false);
  static BulkScheme dissipative(double courant, double omega);
  static BulkScheme manufactured(double courant);

  /// Throws std::invalid_argument when the parameter invariants fail:
  /// leap-frog needs -1 < C < 0 (unless overridden), dissipative needs
  /// w in (0,2) and 0 < C <= 1, manufactured needs 0 < C < 1.
  void validate() const;
};

/// Boundary update u_0^{n+1} = sum_k b_k u_k^n + sum_k bt_k u_k^{n-1},
/// both sequences compactly supported.
struct BoundaryScheme {
  std::vector<double> b;
  std::vector<double> bt;

  void validate() const;
  std::size_t support() const;

  double sum_b() const;
  double sum_bt() const;
  double sum_k_b() const;                  // sum k b_k
  double sum_k_bt() const;
  double sum_k_b_minus_bt() const;         // sum_{k>=1} k (b_k - bt_k)
  double sum_alt_b() const;                // sum (-1)^k b_k
  double sum_alt_bt() const;

  // Named schemes used throughout the tests and the CLI.
  static BoundaryScheme dirichlet();
  static BoundaryScheme upwind(double courant);
  static BoundaryScheme upwind_diffusive(double courant, double delta);
  static BoundaryScheme upwind_leapfrog(double courant);  // b0=-b1=1+2C, bt1=1
  static BoundaryScheme anti_bounce_back(double courant); // b0=C, b1=-C, bt0=1
  /// Pole of the boundary symbol placed on the saddle pair of group
  /// velocity nu_bar: b0 = 2 sqrt((1-C^2)/(1-nu_bar^2)), bt0 = -1.
  static BoundaryScheme saddle_resonant(double courant, double nu_bar);

  /// Resolves a builtin name (dirichlet, upwind, ...) or loads a JSON file.
  static BoundaryScheme named_or_file(const std::string& spec, double courant);

  std::string to_json() const;
  static BoundaryScheme from_json(const std::string& text);
  static BoundaryScheme load(const std::string& path);
};

/// Corner scheme u_0^1 = sum_k c_k u_k^0 and first-row bulk scheme
/// u_j^1 = sum_{k>=-1} s_k u_{j+k}^0. s is stored over k = -1..K with
/// the k = -1 entry held separately.
struct CornerScheme {
  std::vector<double> c;
  double s_minus1 = 0.0;
  std::vector<double> s;  // k >= 0

  void validate() const;

  struct OrderCheck {
    bool c_sums_to_one;
    bool s_sums_to_one;
    bool s_first_moment_matches;  // sum k s_k == -C
    bool all() const { return c_sums_to_one && s_sums_to_one && s_first_moment_matches; }
  };
  OrderCheck order_constraints(double courant, double tol = 1e-12) const;

  static CornerScheme lax_friedrichs(double courant);

  std::string to_json() const;
  static CornerScheme from_json(const std::string& text);
  static CornerScheme load(const std::string& path);
};

}  // namespace fdw
