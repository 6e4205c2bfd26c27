#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "fdw/asymptotics.hpp"
#include "fdw/field.hpp"
#include "fdw/simulate.hpp"

using namespace fdw;

namespace {

const auto lf = BulkScheme::leap_frog(-0.5);

// One pass of the recurrence collecting the requested (n, j) samples.
std::map<std::pair<int, int>, double> sample(const BulkScheme& bulk,
                                             const BoundaryScheme& bd,
                                             const std::vector<std::pair<int, int>>& probes) {
  int n_top = 1;
  for (auto& p : probes) n_top = std::max(n_top, p.first);
  std::map<std::pair<int, int>, double> out;
  simulate_error_rows(bulk, bd, n_top, default_window(bd, n_top),
                      [&](int n, std::span<const double> row) {
                        for (auto& p : probes)
                          if (p.first == n) out[p] = row[static_cast<std::size_t>(p.second)];
                      });
  return out;
}

}  // namespace

TEST_CASE("near-wall dual path: random (n, j) pairs") {
  auto bd = BoundaryScheme::upwind(-0.5);
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> jdist(0, 20);
  std::uniform_int_distribution<int> ndist(100, 10000);
  for (int it = 0; it < 50; ++it) {
    const int j = jdist(rng);
    const int n = std::max(ndist(rng), 4 * j + 4);
    const auto p = predict_near_wall(bd, lf, n, j, PredictionMode::Stable);
    const double special = near_wall_upwind_form(-0.5, n, j);
    CHECK(std::abs(p.value - special) <= 1e-12 * std::max(1.0, std::abs(special)));
  }
  // quoted pairs
  for (auto [n, j] : {std::pair{100, 1}, std::pair{101, 9}}) {
    const auto p = predict_near_wall(bd, lf, n, j, PredictionMode::Stable);
    CHECK(std::abs(p.value - near_wall_upwind_form(-0.5, n, j)) <= 1e-12);
  }
}

TEST_CASE("near-wall remainder decays like n^{-5/2} at matched phase") {
  auto bd = BoundaryScheme::upwind(-0.5);
  // The remainder carries an oscillating factor with period 12 in n
  // (theta_BP = pi/6); 1000 and 4000 sit at the same phase, so two
  // doublings shrink the deviation by 2^{2 * 5/2} = 32 up to +-50%.
  auto sims = sample(lf, bd, {{1000, 1}, {4000, 1}});
  const double e1 =
      std::abs(sims[{1000, 1}] - predict_near_wall(bd, lf, 1000, 1, PredictionMode::Stable).value);
  const double e2 =
      std::abs(sims[{4000, 1}] - predict_near_wall(bd, lf, 4000, 1, PredictionMode::Stable).value);
  CHECK(e1 / e2 > 0.5 * 32.0);
  CHECK(e1 / e2 < 1.5 * 32.0);
}

TEST_CASE("near-wall unstable leading term is the residue plateau") {
  auto bd = BoundaryScheme::upwind_leapfrog(-0.5);
  for (int n : {400, 401}) {
    const auto p = predict_near_wall(bd, lf, n, 1, PredictionMode::Unstable);
    const double plateau = (n % 2 ? -1.0 : 1.0) * (-0.25);
    CHECK(std::abs(p.value - plateau) < 1e-3);           // tail is O(n^{-3/2})
    CHECK(*p.diagnostics.residue == doctest::Approx(-0.25));
    // unstable minus plateau equals the stable tail exactly (same code path)
    const auto s = predict_near_wall(bd, lf, n, 1, PredictionMode::Stable);
    CHECK(p.value - plateau == doctest::Approx(s.value).epsilon(1e-15));

    const auto pt = predict_transition(bd, lf, n, n / 4, PredictionMode::Unstable);
    const auto st = predict_transition(bd, lf, n, n / 4, PredictionMode::Stable);
    CHECK(pt.value - plateau == doctest::Approx(st.value).epsilon(1e-15));
  }
}

TEST_CASE("transition: upwind sums are real and both formula paths agree") {
  auto bd = BoundaryScheme::upwind(-0.5);
  const auto p = predict_transition(bd, lf, 2000, 500, PredictionMode::Stable);
  CHECK(std::abs(p.diagnostics.gR.imag()) < 1e-12);
  CHECK(std::abs(p.diagnostics.gL.imag()) < 1e-12);

  // specialized trigonometric form
  const double c = -0.5, nu = 0.25;
  const double root = std::sqrt((1.0 - c * c) * (1.0 + nu) / (1.0 - nu));
  const double arg = (2000 - 1.0) * p.diagnostics.theta_sp - 500.0 * p.diagnostics.xi_sp -
                     0.5 * std::arg(p.diagnostics.sigma);
  const double special = std::sqrt(2.0 / (M_PI * std::abs(p.diagnostics.sigma))) *
                         (1.0 / (-(1.0 + c) + root) - 1.0 / ((1.0 + c) + root)) *
                         std::cos(arg) / std::sqrt(2000.0);
  CHECK(p.value == doctest::Approx(special).epsilon(1e-12));
}

TEST_CASE("transition: prediction bounded by the envelope pair") {
  auto bd = BoundaryScheme::upwind(-0.5);
  for (int n : {1000, 2000, 4000}) {
    const int j = n / 4;
    const auto p = predict_transition(bd, lf, n, j, PredictionMode::Stable);
    REQUIRE(p.diagnostics.envelope.has_value());
    CHECK(std::abs(p.value) <= p.diagnostics.envelope->first * (1.0 + 1e-12));
  }
}

TEST_CASE("transition remainder scales like n^{-3/2}") {
  auto bd = BoundaryScheme::upwind(-0.5);
  auto sims = sample(lf, bd, {{4000, 1000}, {8000, 2000}});
  std::vector<double> scaled;
  for (auto [n, j] : {std::pair{4000, 1000}, std::pair{8000, 2000}}) {
    const auto p = predict_transition(bd, lf, n, j, PredictionMode::Stable);
    scaled.push_back(std::abs(sims[{n, j}] - p.value) * std::pow(double(n), 1.5));
  }
  CHECK(scaled[0] < 3.0 * scaled[1]);
  CHECK(scaled[1] < 3.0 * scaled[0]);
}

TEST_CASE("transition rejects out-of-zone ratios") {
  auto bd = BoundaryScheme::upwind(-0.5);
  CHECK_THROWS_AS(predict_transition(bd, lf, 1000, 0, PredictionMode::Stable),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict_transition(bd, lf, 1000, 500, PredictionMode::Stable),
                  std::invalid_argument);
}

TEST_CASE("front: cube scale is positive and real") {
  const auto p = predict_front(BoundaryScheme::upwind(-0.5), lf, 1600, 800,
                               PredictionMode::Stable);
  // w^3 = (C/2)(C^2-1) n = (3/16) n
  CHECK(std::pow(0.1875 * 1600.0, 1.0 / 3.0) ==
        doctest::Approx(std::cbrt(0.1875 * 1600.0)));
  CHECK(p.diagnostics.offset == doctest::Approx(0.0));
}

TEST_CASE("front remainder scales like n^{-2/3} for the diffusive boundary") {
  auto bd = BoundaryScheme::upwind_diffusive(-0.5, 0.25);
  auto sims = sample(lf, bd, {{2000, 1000}, {4000, 2000}, {8000, 4000}});
  std::vector<double> scaled;
  for (int n : {2000, 4000, 8000}) {
    const auto p = predict_front(bd, lf, n, n / 2, PredictionMode::Stable);
    scaled.push_back(std::abs(sims[{n, n / 2}] - p.value) * std::pow(double(n), 2.0 / 3.0));
  }
  for (double s : scaled) {
    CHECK(s < 3.0 * scaled[0]);
    CHECK(s > scaled[0] / 3.0);
  }
}

TEST_CASE("front unstable: residue shaded by the Airy primitive") {
  auto bd = BoundaryScheme::upwind_leapfrog(-0.5);
  const int n = 10000;
  const auto p = predict_front(bd, lf, n, n / 2, PredictionMode::Unstable);
  // offset 0: value = (-1)^{n+1}/12 at C = -1/2
  CHECK(p.value == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
  auto sims = sample(lf, bd, {{n, n / 2}});
  CHECK(std::abs(sims[{n, n / 2}] - p.value) < 0.2 * std::abs(p.value));
}

TEST_CASE("front/transition seam: magnitudes agree within a factor 3") {
  auto bd = BoundaryScheme::upwind(-0.5);
  const int n = 10000;
  const int j = static_cast<int>(std::llround(0.5 * n - 5.0 * std::pow(double(n), 1.0 / 3.0)));
  // compare peak magnitudes over a few adjacent cells to dodge oscillation nulls
  double mt = 0, mf = 0;
  for (int dj = -3; dj <= 3; ++dj) {
    mt = std::max(mt, std::abs(predict_transition(bd, lf, n, j + dj, PredictionMode::Stable).value));
    mf = std::max(mf, std::abs(predict_front(bd, lf, n, j + dj, PredictionMode::Stable).value));
  }
  CHECK(mt < 3.0 * mf);
  CHECK(mf < 3.0 * mt);
}

TEST_CASE("gaussian peak: variance and bracket") {
  auto bulk = BulkScheme::dissipative(0.5, 1.5);
  auto bd = BoundaryScheme::dirichlet();
  const int n = 10000;
  // std dev 50 at omega = 3/2, C = 1/2, n = 1e4
  CHECK(std::sqrt(2.0 * n * (1.0 / 1.5 - 0.5) * 0.75) == doctest::Approx(50.0));
  const int j = n / 2 + 1;  // odd n+j: bracket = 2C
  const auto p = predict_gaussian(bd, bulk, n, j);
  const double expect = 1.0 * std::exp(-0.5 / 2500.0) / std::sqrt(2.0 * M_PI * 2500.0);
  CHECK(p.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(predict_gaussian(bd, bulk, n, n / 2).value == doctest::Approx(0.0));
}

TEST_CASE("gaussian peak tracks the simulation to 10% of the peak") {
  auto bulk = BulkScheme::dissipative(0.5, 1.5);
  auto bd = BoundaryScheme::dirichlet();
  const int n = 4000;
  auto row = simulate_error(bulk, bd, n).front();
  double peak = 0, sup = 0;
  for (int j = 0; j < static_cast<int>(row.values.size()); ++j) {
    const double offset = j - 0.5 * n;
    if (std::abs(offset) > 10.0 * std::sqrt(double(n))) continue;
    const double pred = predict_gaussian(bd, bulk, n, j).value;
    peak = std::max(peak, std::abs(pred));
    sup = std::max(sup, std::abs(row.values[static_cast<std::size_t>(j)] - pred));
  }
  CHECK(sup < 0.10 * peak);
}

TEST_CASE("l2 asymptote: Dirichlet closed form at three Courant numbers") {
  for (double c : {-0.25, -0.5, -0.75}) {
    const auto bulk = BulkScheme::leap_frog(c);
    const double quad = l2_asymptote(BoundaryScheme::dirichlet(), bulk);
    CHECK(std::abs(quad - dirichlet_l2_closed_form(c)) < 1e-8);
  }
  CHECK(dirichlet_l2_closed_form(-0.5) == doctest::Approx(0.3660254037844387));
}

TEST_CASE("l2 asymptote matches the simulated plateau") {
  auto bd = BoundaryScheme::upwind(-0.5);
  const double quad = l2_asymptote(bd, lf);
  const int n = 10000;
  auto row = simulate_error(lf, bd, n).front();
  CHECK(std::abs(lp_norm(row, 2.0) - quad) < 1e-3);
}

TEST_CASE("moment asymptotes") {
  auto bd = BoundaryScheme::upwind(-0.5);
  // order 0: (-1)^{n+1}/4
  CHECK(moment_asymptote(bd, -0.5, 0, false, 10000) == doctest::Approx(-0.25));
  CHECK(moment_asymptote(bd, -0.5, 0, false, 10001) == doctest::Approx(0.25));
  // order 1 constant part vanishes for the upwind boundary
  const double slope = -(-0.5) * (-0.5) / (1.0 + bd.sum_b() - bd.sum_bt());
  CHECK(moment_asymptote(bd, -0.5, 1, false, 10000) ==
        doctest::Approx(slope * 10000.0).epsilon(1e-12));
  // Dirichlet alternating: C/(0 - 1) = -C
  CHECK(moment_asymptote(BoundaryScheme::dirichlet(), -0.5, 0, true, 7) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(moment_asymptote(bd, -0.5, 1, true, 10), std::invalid_argument);
}

TEST_CASE("measured moments approach their asymptotes") {
  auto bd = BoundaryScheme::upwind(-0.5);
  auto row = simulate_error(lf, bd, 10000).front();
  CHECK(std::abs(moments(row, 0) - moment_asymptote(bd, -0.5, 0, false, 10000)) < 1e-3);
  CHECK(std::abs(moments(row, 0, true) - moment_asymptote(bd, -0.5, 0, true, 10000)) < 1e-3);
}

TEST_CASE("lp exponents") {
  CHECK(lp_exponent(1.0).exponent == doctest::Approx(0.5));
  CHECK(lp_exponent(1.0).dominant == Zone::Transition);
  CHECK(lp_exponent(4.0).exponent == doctest::Approx(-0.25));
  CHECK(lp_exponent(4.0).tie);
  CHECK(lp_exponent(std::numeric_limits<double>::infinity()).exponent ==
        doctest::Approx(-1.0 / 3.0));
  CHECK(lp_exponent(std::numeric_limits<double>::infinity()).dominant == Zone::Front);
  CHECK(lp_exponent(2.0).exponent == doctest::Approx(0.0));
}

TEST_CASE("stable scale law: no spurious blowup across decades") {
  auto bd = BoundaryScheme::upwind(-0.5);
  // |prediction| * n^{-scale_exponent * (-1)} stays bounded above and below
  std::vector<double> norm1000, norm10000;
  for (int n : {1000, 10000}) {
    auto& dst = n == 1000 ? norm1000 : norm10000;
    dst.push_back(std::abs(predict_near_wall(bd, lf, n, 1, PredictionMode::Stable).value) *
                  std::pow(double(n), 1.5));
    dst.push_back(std::abs(predict_transition(bd, lf, n, n / 4, PredictionMode::Stable).value) *
                  std::pow(double(n), 0.5));
    dst.push_back(std::abs(predict_front(bd, lf, n, n / 2, PredictionMode::Stable).value) *
                  std::pow(double(n), 1.0 / 3.0));
  }
  for (std::size_t i = 0; i < norm1000.size(); ++i) {
    CHECK(norm10000[i] < 10.0 * norm1000[i] + 1.0);
    CHECK(norm1000[i] < 10.0 * norm10000[i] + 1.0);
  }
}
