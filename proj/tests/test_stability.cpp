#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "fdw/stability.hpp"

using namespace fdw;

namespace {
const auto lf = BulkScheme::leap_frog(-0.5);
}

TEST_CASE("simple-zero identities at z = -1") {
  auto ulf = check_simple_zero_minus_one(BoundaryScheme::upwind_leapfrog(-0.5), -0.5);
  CHECK(ulf.holds_first);
  CHECK(ulf.holds_second);

  auto up = check_simple_zero_minus_one(BoundaryScheme::upwind(-0.5), -0.5);
  CHECK_FALSE(up.holds_first);
  CHECK(up.first_value == doctest::Approx(2.0));

  auto abb = check_simple_zero_minus_one(BoundaryScheme::anti_bounce_back(-0.5), -0.5);
  CHECK(abb.holds_first);
  CHECK(abb.holds_second);
}

TEST_CASE("verdicts for the named schemes") {
  auto v1 = classify(BoundaryScheme::upwind(-0.5), lf);
  CHECK(v1.cls == StabilityClass::Stable);

  auto v2 = classify(BoundaryScheme::dirichlet(), lf);
  CHECK(v2.cls == StabilityClass::Stable);
  CHECK(v2.min_abs_D == doctest::Approx(1.0).epsilon(1e-9));

  auto v3 = classify(BoundaryScheme::upwind_diffusive(-0.5, 0.25), lf);
  CHECK(v3.cls == StabilityClass::Stable);

  auto v4 = classify(BoundaryScheme::upwind_leapfrog(-0.5), lf);
  CHECK(v4.cls == StabilityClass::UnstableSimpleZero);
  REQUIRE(v4.zeros.size() == 1);
  CHECK(v4.zeros[0].z.real() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::abs(v4.zeros[0].z.imag()) < 1e-9);
  CHECK(v4.zeros[0].multiplicity == 1);
}

TEST_CASE("saddle-resonant scheme: non-real conjugate pair on the circle") {
  const double c = -0.75;
  const double nu_bar = 0.75 * std::abs(c);
  const auto bulk = BulkScheme::leap_frog(c);
  auto v = classify(BoundaryScheme::saddle_resonant(c, nu_bar), bulk);
  CHECK(v.cls == StabilityClass::UnstableUnitCircleZeros);
  REQUIRE(v.zeros.size() == 2);
  // D = z^2 - b0 z + 1 with b0 = 1.6: zeros 0.8 +- 0.6 i.
  for (const auto& z : v.zeros) {
    CHECK(std::abs(std::abs(z.z) - 1.0) < 1e-9);
    CHECK(z.z.real() == doctest::Approx(0.8).epsilon(1e-7));
    CHECK(std::abs(z.z.imag()) == doctest::Approx(0.6).epsilon(1e-7));
  }
  CHECK(v.zeros[0].z.imag() * v.zeros[1].z.imag() < 0.0);  // conjugate pair
}

TEST_CASE("Godunov-Ryabenkii: determinant zero outside the circle") {
  BoundaryScheme bad{{3.0}, {}};  // D = z(z - 3)
  auto v = classify(bad, lf);
  CHECK(v.cls == StabilityClass::GodunovRyabenkii);
  REQUIRE(v.zeros.size() == 1);
  CHECK(std::abs(v.zeros[0].z - cplx(3.0, 0.0)) < 1e-6);
}

TEST_CASE("verdicts are invariant under the winding radius") {
  for (double delta : {1e-2, 1e-3, 1e-4}) {
    CHECK(classify(BoundaryScheme::upwind(-0.5), lf, delta).cls == StabilityClass::Stable);
    CHECK(classify(BoundaryScheme::dirichlet(), lf, delta).cls == StabilityClass::Stable);
    CHECK(classify(BoundaryScheme::upwind_leapfrog(-0.5), lf, delta).cls ==
          StabilityClass::UnstableSimpleZero);
    CHECK(classify(BoundaryScheme::upwind_diffusive(-0.5, 0.25), lf, delta).cls ==
          StabilityClass::Stable);
  }
}

TEST_CASE("winding count is an integer") {
  for (const auto& bd : {BoundaryScheme::upwind(-0.5), BoundaryScheme::dirichlet(),
                         BoundaryScheme::upwind_leapfrog(-0.5)}) {
    auto v = classify(bd, lf);
    CHECK(std::abs(v.winding - std::lround(v.winding)) < 1e-6);
  }
}

TEST_CASE("dissipative bulk classifies too") {
  auto bulk = BulkScheme::dissipative(0.5, 1.5);
  CHECK(classify(BoundaryScheme::dirichlet(), bulk).cls == StabilityClass::Stable);
}

TEST_CASE("verdict serializes to JSON") {
  auto v = classify(BoundaryScheme::upwind_leapfrog(-0.5), lf);
  const auto js = v.to_json();
  CHECK(js.find("UnstableSimpleZero") != std::string::npos);
  CHECK(js.find("multiplicity") != std::string::npos);
}
