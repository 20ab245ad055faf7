#include <doctest.h>

#include <cmath>

#include "rgresum/approximants.hpp"
#include "rgresum/error.hpp"
#include "rgresum/rg_flow.hpp"

using namespace rgresum;

namespace {

const Series kLn{0.0, 1.0, -0.5, 1.0 / 3.0};
const Series kInvSqrt{0.0, 1.0, -0.5, 0.375};

}  // namespace

TEST_CASE("generic flow reproduces the closed forms") {
  CHECK(std::abs(generic_rg_value(kLn, 1.0, 1) - (1.0 - std::exp(-1.0))) <= 1e-9);
  CHECK(generic_rg_value(kLn, 0.0) == 0.0);
  CHECK(generic_rg_value(Series{0.4, 2.0, 1.0, 0.0}, 0.0, 1) == 0.4);
  for (const Series &a : {kLn, kInvSqrt, Series{0.2, 1.5, 0.6, -0.3}}) {
    for (double x : {0.1, 0.5, 1.0, 2.0}) {
      const double b2 = eval(fit(a, ApproximantKind::Beta2), x);
      const double b3 = eval(fit(a, ApproximantKind::Beta3), x);
      CHECK(std::abs(generic_rg_value(a, x, 1) - b2) <= 1e-9 * std::max(1.0, std::abs(b2)));
      CHECK(std::abs(generic_rg_value(a, x, 2) - b3) <= 1e-9 * std::max(1.0, std::abs(b3)));
    }
  }
}

TEST_CASE("flow with a beta zero stops short of it") {
  // beta(phi) = 1 - phi: the fixed point at f = 1 is reached only as x -> inf.
  const RgFlow flow(kLn, 1);
  CHECK(flow.beta(0.0) == 1.0);
  CHECK(flow.F(5.0, 0.0) == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-10));
  CHECK(flow.F(15.0, 0.0) < 1.0);
  CHECK(flow.F(15.0, 0.0) == doctest::Approx(1.0 - std::exp(-15.0)).epsilon(1e-12));
  // Closer than the quadrature can resolve: reported, not silently clamped.
  try {
    flow.F(30.0, 0.0);
  } catch (const Error &e) {
    CHECK(e.is_convergence());
  }
}

TEST_CASE("group property") {
  CHECK(check_group_property(kLn, 0.3, 0.4) <= 1e-9);
  CHECK(check_group_property(kLn, 0.3, 0.0) == 0.0);
  CHECK(check_group_property(kInvSqrt, 0.1, 0.1) <= 1e-9);
  CHECK(check_group_property(Series{0.5, 0.75, -2.625}, 0.2, 0.7) <= 1e-9);
}

TEST_CASE("infinitesimal operator") {
  CHECK(check_infinitesimal_operator(kLn, 0.5, 1e-4) <= 1e-6);
  CHECK(check_infinitesimal_operator(Series{1.0, 2.0, 0.0, 0.0}, 0.7, 1e-3) <= 1e-10);

  const double r1 = check_infinitesimal_operator(kLn, 0.5, 0.04);
  const double r2 = check_infinitesimal_operator(kLn, 0.5, 0.02);
  const double r3 = check_infinitesimal_operator(kLn, 0.5, 0.01);
  MESSAGE("residuals " << r1 << " " << r2 << " " << r3);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.1));
  CHECK(r2 / r3 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("flow errors") {
  CHECK_THROWS_AS(RgFlow(Series{0.0, 0.0, 1.0}), Error);
  CHECK_THROWS_AS(RgFlow(Series{0.0, 1.0}, 0, 0.0), Error);
}
