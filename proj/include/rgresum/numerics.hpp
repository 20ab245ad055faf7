#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "rgresum/error.hpp"

namespace rgresum {

// ---------------------------------------------------------------------------
// Adaptive quadrature
// ---------------------------------------------------------------------------

inline constexpr int kMaxSubdivisionDepth = 60;

namespace detail {

template <typename F>
double simpson_step(F &f, double a, double b, double fa, double fm, double fb, double whole,
                    double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
  if (depth >= kMaxSubdivisionDepth || !(lm > a && rm < b)) {
    throw Error(ErrorKind::ConvergenceFailure,
                "adaptive quadrature hit its subdivision limit near x=" + std::to_string(m));
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
}

}  // namespace detail

/// Integral of f over [a, b] by adaptive Simpson with Richardson correction.
///
/// The absolute target is rel_tol times a coarse 32-panel estimate of the
/// integral, distributed over 16 starting panels in proportion to width.
template <typename F>
double adaptive_quadrature(F &&f, double a, double b, double rel_tol) {
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::DomainError, "rel_tol must be positive");
  if (a == b) return 0.0;
  if (b < a) return -adaptive_quadrature(f, b, a, rel_tol);

  constexpr int kPanels = 16;
  std::array<double, 2 * kPanels + 1> xs{};
  std::array<double, 2 * kPanels + 1> ys{};
  const double step = (b - a) / (2 * kPanels);
  for (int i = 0; i <= 2 * kPanels; ++i) {
    xs[i] = i == 2 * kPanels ? b : a + i * step;
    ys[i] = f(xs[i]);
    if (!std::isfinite(ys[i])) {
      throw Error(ErrorKind::DomainError, "integrand is not finite at x=" + std::to_string(xs[i]));
    }
  }
  std::array<double, kPanels> whole{};
  double coarse = 0.0;
  double coarse_abs = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    whole[k] = (xs[2 * k + 2] - xs[2 * k]) / 6.0 * (ys[2 * k] + 4.0 * ys[2 * k + 1] + ys[2 * k + 2]);
    coarse += whole[k];
    coarse_abs += std::abs(whole[k]);
  }
  const double scale = coarse != 0.0 ? std::abs(coarse) : (coarse_abs != 0.0 ? coarse_abs : 1.0);
  const double eps = rel_tol * scale;

  double total = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    const double lo = xs[2 * k];
    const double hi = xs[2 * k + 2];
    total += detail::simpson_step(f, lo, hi, ys[2 * k], ys[2 * k + 1], ys[2 * k + 2], whole[k],
                                  eps * (hi - lo) / (b - a), 1);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Bracketed root finding
// ---------------------------------------------------------------------------

struct RootBracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  /// Evaluates f at both ends and checks the sign-change invariant.
  template <typename F>
  static RootBracket make(F &&f, double lo, double hi) {
    RootBracket br{lo, hi, f(lo), f(hi)};
    br.validate();
    return br;
  }

  void validate() const {
    if (!(lo < hi)) throw Error(ErrorKind::NoRootInBracket, "bracket requires lo < hi");
    if (!(f_lo * f_hi <= 0.0)) {
      throw Error(ErrorKind::NoRootInBracket,
                  "no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
  }
};

inline constexpr int kMaxRootIterations = 200;

/// Root of f inside the bracket: secant steps guarded by bisection.
///
/// A bisection step is forced whenever the secant point falls outside the
/// bracket or two consecutive steps failed to halve the bracket width.
/// Stops when |f(x)| <= tol or the width is <= tol * max(1, |x|).
template <typename F>
double find_root(F &&f, RootBracket bracket, double tol) {
  bracket.validate();
  double lo = bracket.lo, hi = bracket.hi;
  double flo = bracket.f_lo, fhi = bracket.f_hi;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  double width_two_back = std::numeric_limits<double>::infinity();
  double width_one_back = hi - lo;
  bool force_bisect = false;
  for (int iter = 0; iter < kMaxRootIterations; ++iter) {
    double x = hi - fhi * (hi - lo) / (fhi - flo);
    if (force_bisect || !(x > lo && x < hi)) x = 0.5 * (lo + hi);
    if (!(x > lo && x < hi)) return std::abs(flo) < std::abs(fhi) ? lo : hi;

    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw Error(ErrorKind::ConvergenceFailure, "function not finite at x=" + std::to_string(x));
    }
    if (std::abs(fx) <= tol) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double width = hi - lo;
    if (width <= tol * std::max(1.0, std::abs(x))) return std::abs(flo) < std::abs(fhi) ? lo : hi;
    force_bisect = width > 0.5 * width_two_back;
    width_two_back = width_one_back;
    width_one_back = width;
  }
  throw Error(ErrorKind::ConvergenceFailure, "root search exceeded its iteration cap");
}

// ---------------------------------------------------------------------------
// Dense symmetric eigenproblem
// ---------------------------------------------------------------------------

/// Dense real matrix with entry(i, j) == entry(j, i) exactly.
class SymmetricMatrix {
public:
  explicit SymmetricMatrix(Eigen::Index dimension);
  explicit SymmetricMatrix(Eigen::MatrixXd entries);

  Eigen::Index dimension() const { return entries_.rows(); }
  double entry(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, double value) {
    entries_(i, j) = value;
    entries_(j, i) = value;
  }
  const Eigen::MatrixXd &dense() const { return entries_; }

private:
  Eigen::MatrixXd entries_;
};

inline constexpr Eigen::Index kMaxEigenDimension = 1024;

/// Smallest eigenvalue by cyclic Jacobi sweeps; stops once the off-diagonal
/// Frobenius norm is <= tol times the full Frobenius norm.
double symmetric_eigen_smallest(const SymmetricMatrix &m, double tol);

/// All eigenvalues in ascending order, same algorithm.
Eigen::VectorXd symmetric_eigenvalues(const SymmetricMatrix &m, double tol);

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

enum class DerivativeOrder { First = 1, Second = 2 };

template <typename F>
double central_difference(F &&f, double x, double h, DerivativeOrder order) {
  if (!(h > 0.0)) throw Error(ErrorKind::DomainError, "step must be positive");
  if (order == DerivativeOrder::First) return (f(x + h) - f(x - h)) / (2.0 * h);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace rgresum
