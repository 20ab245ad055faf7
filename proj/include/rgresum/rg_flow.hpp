#pragma once

#include <optional>

#include "rgresum/series.hpp"

namespace rgresum {

/// The one-parameter flow F(x; f) = X^{-1}(x + X(f)) with X(f) = int df / beta(f),
/// built numerically from a truncated beta-series.
///
/// beta is the series beta_series(a) in phi = (f - a_0)/a_1, optionally cut
/// after phi^beta_order. Keeping phi^1 (phi^2) reproduces Beta2 (Beta3).
class RgFlow {
public:
  explicit RgFlow(const Series &a, std::optional<Eigen::Index> beta_order = std::nullopt,
                  double rel_tol = 1e-12);

  double beta(double f) const;

  /// X(f) with the integration constant fixed by X(a_0) = 0.
  double X(double f) const;

  /// F(x; f): solves int_f^F dt / beta(t) = x by bracketed root search.
  double F(double x, double f) const;

  double a0() const { return a0_; }
  const Series &beta_coeffs() const { return beta_; }

private:
  double travel(double from, double to) const;
  double beta_zero_between(double lo, double hi) const;

  Series beta_;
  double a0_;
  double a1_;
  double rel_tol_;
};

/// F(x; a_0) for the flow of a, using the whole available beta-series unless
/// beta_order is given.
double generic_rg_value(const Series &a, double x,
                        std::optional<Eigen::Index> beta_order = std::nullopt);

/// |F(x + x1; a_0) - F(x; F(x1; a_0))|.
double check_group_property(const Series &a, double x, double x1);

/// |dF/dx - beta(f) dF/df| at (x, a_0), both partials by central differences.
double check_infinitesimal_operator(const Series &a, double x, double h);

}  // namespace rgresum
