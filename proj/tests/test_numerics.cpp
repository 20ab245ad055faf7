#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "rgresum/models.hpp"
#include "rgresum/numerics.hpp"

using namespace rgresum;

TEST_CASE("quadrature examples") {
  CHECK(std::abs(adaptive_quadrature([](double x) { return x * x; }, 0.0, 1.0, 1e-12) - 1.0 / 3.0) <=
        1e-12);
  const double l = std::sqrt(-std::log(1e-17));
  const double gauss =
      2.0 * std::numbers::inv_sqrtpi * adaptive_quadrature([](double x) { return std::exp(-x * x); }, 0.0, l, 1e-13);
  CHECK(std::abs(gauss - 1.0) <= 1e-12);

  const double t = -std::log(1e-16);
  const double lq = std::sqrt(2.0 * t / (1.0 + std::sqrt(1.0 + 4.0 * t)));
  const double direct = 2.0 * std::numbers::inv_sqrtpi *
                        adaptive_quadrature([](double x) { return std::exp(-x * x - x * x * x * x); }, 0.0, lq, 1e-12);
  CHECK(std::abs(direct - partition_exact(1.0)) <= 1e-14);

  CHECK(adaptive_quadrature([](double x) { return x; }, 1.0, 1.0, 1e-10) == 0.0);
  CHECK(adaptive_quadrature([](double x) { return x; }, 1.0, 0.0, 1e-12) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(adaptive_quadrature([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10), Error);
  CHECK_THROWS_AS(adaptive_quadrature([](double x) { return x; }, 0.0, 1.0, 0.0), Error);
}

TEST_CASE("quadrature error estimate is conservative") {
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    for (int k = 0; k <= 8; ++k) {
      const double got = adaptive_quadrature([k](double x) { return std::pow(x, k); }, 0.0, 2.0, tol);
      const double exact = std::pow(2.0, k + 1) / (k + 1);
      CHECK(std::abs(got - exact) <= tol * exact);
    }
    const double got = adaptive_quadrature([](double x) { return std::exp(-x * x); }, 0.0, 3.0, tol);
    const double exact = 0.5 * std::sqrt(std::numbers::pi) * std::erf(3.0);
    CHECK(std::abs(got - exact) <= tol * exact);
  }
}

TEST_CASE("root examples") {
  auto f = [](double x) { return x * x - 2.0; };
  const double r = find_root(f, RootBracket::make(f, 1.0, 2.0), 1e-14);
  CHECK(std::abs(r - std::numbers::sqrt2) <= 1e-12);

  auto no_root = [](double x) { return x * x + 1.0; };
  try {
    RootBracket::make(no_root, -1.0, 1.0);
    FAIL("expected NoRootInBracket");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NoRootInBracket);
  }
}

TEST_CASE("root stays inside the bracket") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double shift = u(rng);
    auto f = [shift](double x) { return std::tanh(5.0 * (x - shift)) + 0.01 * (x - shift); };
    const double lo = shift - 4.0 + u(rng) * 0.5;
    const double hi = shift + 4.0 + u(rng) * 0.5;
    const double r = find_root(f, RootBracket::make(f, lo, hi), 1e-13);
    CHECK(r >= lo);
    CHECK(r <= hi);
    CHECK(std::abs(r - shift) <= 1e-12);
  }
}

TEST_CASE("jacobi examples") {
  SymmetricMatrix d(3);
  d.set(0, 0, 3.0);
  d.set(1, 1, 1.0);
  d.set(2, 2, 2.0);
  CHECK(symmetric_eigen_smallest(d, 1e-14) == 1.0);

  SymmetricMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(1, 1, 2.0);
  m.set(0, 1, 1.0);
  const Eigen::VectorXd ev = symmetric_eigenvalues(m, 1e-14);
  CHECK(ev(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ev(1) == doctest::Approx(3.0).epsilon(1e-15));

  CHECK(std::abs(symmetric_eigen_smallest(oscillator_hamiltonian(0.0, 1.0, 32), 1e-13) - 0.5) <= 1e-12);

  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(2, 2);
  asym(0, 1) = 1e-3;
  CHECK_THROWS_AS(SymmetricMatrix{asym}, Error);
  CHECK_THROWS_AS(symmetric_eigen_smallest(SymmetricMatrix(kMaxEigenDimension + 1), 1e-12), Error);
}

namespace {

// Real roots of det(A - l I) for symmetric 3x3 A via the trigonometric cubic solution.
Eigen::Vector3d characteristic_roots(const Eigen::Matrix3d &a) {
  const double c2 = -a.trace();
  const double c1 = a(0, 0) * a(1, 1) + a(0, 0) * a(2, 2) + a(1, 1) * a(2, 2) - a(0, 1) * a(0, 1) -
                    a(0, 2) * a(0, 2) - a(1, 2) * a(1, 2);
  const double c0 = -a.determinant();
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double phi = std::acos(std::clamp(3.0 * q / (p * r), -1.0, 1.0)) / 3.0;
  Eigen::Vector3d roots;
  for (int k = 0; k < 3; ++k) roots(k) = r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - c2 / 3.0;
  std::sort(roots.data(), roots.data() + 3);
  return roots;
}

}  // namespace

TEST_CASE("jacobi against independent oracles") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd a = Eigen::MatrixXd::NullaryExpr(10, 10, [&] { return u(rng); });
    a = (0.5 * (a + a.transpose())).eval();
    const Eigen::VectorXd got = symmetric_eigenvalues(SymmetricMatrix(a), 1e-14);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
    CHECK((got - ref).cwiseAbs().maxCoeff() <= 1e-12);

    const Eigen::Matrix3d block = a.topLeftCorner(3, 3);
    const Eigen::VectorXd small = symmetric_eigenvalues(SymmetricMatrix(Eigen::MatrixXd(block)), 1e-14);
    CHECK((small - characteristic_roots(block)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("central difference") {
  auto sq = [](double x) { return x * x; };
  CHECK(std::abs(central_difference(sq, 3.0, 1e-5, DerivativeOrder::First) - 6.0) <= 1e-8);
  auto ex = [](double x) { return std::exp(x); };
  CHECK(std::abs(central_difference(ex, 0.0, 1e-5, DerivativeOrder::First) - 1.0) <= 1e-9);
  auto sn = [](double x) { return std::sin(x); };
  CHECK(std::abs(central_difference(sn, 0.0, 1e-3, DerivativeOrder::Second)) <= 1e-6);
  CHECK_THROWS_AS(central_difference(sq, 0.0, 0.0, DerivativeOrder::First), Error);

  for (double x : {0.3, 1.1}) {
    const double e1 = std::abs(central_difference(ex, x, 0.02, DerivativeOrder::First) - std::exp(x));
    const double e2 = std::abs(central_difference(ex, x, 0.01, DerivativeOrder::First) - std::exp(x));
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.01));
    const double s1 = std::abs(central_difference(sn, x, 0.02, DerivativeOrder::Second) + std::sin(x));
    const double s2 = std::abs(central_difference(sn, x, 0.01, DerivativeOrder::Second) + std::sin(x));
    CHECK(s1 / s2 == doctest::Approx(4.0).epsilon(0.01));
  }
}
