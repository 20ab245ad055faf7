#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <type_traits>

#include "rgresum/error.hpp"

namespace rgresum {

inline constexpr Eigen::Index kDefaultSeriesOrder = 8;

/// Taylor coefficients a_0..a_N of a function around the origin.
///
/// Arithmetic between series of different order truncates to the shorter
/// operand; no coefficient is ever extrapolated.
template <typename Scalar>
class TruncatedSeries {
public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit TruncatedSeries(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) {
      throw Error(ErrorKind::InsufficientOrder, "series needs at least one coefficient");
    }
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (!coeffs_.allFinite()) {
        throw Error(ErrorKind::DomainError, "series coefficients must be finite");
      }
    }
  }

  TruncatedSeries(std::initializer_list<Scalar> coeffs)
      : TruncatedSeries(Coeffs::Map(coeffs.begin(), static_cast<Eigen::Index>(coeffs.size()))) {}

  static TruncatedSeries zero(Eigen::Index order = kDefaultSeriesOrder) {
    return TruncatedSeries(Coeffs::Zero(order + 1));
  }

  static TruncatedSeries constant(Scalar value, Eigen::Index order = kDefaultSeriesOrder) {
    Coeffs c = Coeffs::Zero(order + 1);
    c(0) = value;
    return TruncatedSeries(std::move(c));
  }

  /// The series of f(x) = x.
  static TruncatedSeries identity(Eigen::Index order = kDefaultSeriesOrder) {
    Coeffs c = Coeffs::Zero(order + 1);
    if (order >= 1) c(1) = Scalar(1);
    return TruncatedSeries(std::move(c));
  }

  Eigen::Index order() const { return coeffs_.size() - 1; }
  const Coeffs &coeffs() const { return coeffs_; }
  Scalar operator[](Eigen::Index i) const { return i <= order() ? coeffs_(i) : Scalar(0); }

  /// Evaluates the truncated polynomial (Horner).
  Scalar operator()(Scalar x) const {
    Scalar acc = coeffs_(order());
    for (Eigen::Index k = order() - 1; k >= 0; --k) acc = acc * x + coeffs_(k);
    return acc;
  }

  TruncatedSeries truncated(Eigen::Index order) const {
    return TruncatedSeries(Coeffs(coeffs_.head(std::min(order, this->order()) + 1)));
  }

  friend bool operator==(const TruncatedSeries &s, const TruncatedSeries &t) {
    return s.coeffs_.size() == t.coeffs_.size() && s.coeffs_ == t.coeffs_;
  }

private:
  Coeffs coeffs_;
};

using Series = TruncatedSeries<double>;

template <typename Scalar>
TruncatedSeries<Scalar> operator+(const TruncatedSeries<Scalar> &s, const TruncatedSeries<Scalar> &t) {
  const Eigen::Index n = std::min(s.order(), t.order());
  return TruncatedSeries<Scalar>(
      typename TruncatedSeries<Scalar>::Coeffs(s.coeffs().head(n + 1) + t.coeffs().head(n + 1)));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator*(Scalar c, const TruncatedSeries<Scalar> &s) {
  return TruncatedSeries<Scalar>(typename TruncatedSeries<Scalar>::Coeffs(c * s.coeffs()));
}

/// Cauchy product truncated at min(order(s), order(t)).
template <typename Scalar>
TruncatedSeries<Scalar> multiply(const TruncatedSeries<Scalar> &s, const TruncatedSeries<Scalar> &t) {
  const Eigen::Index n = std::min(s.order(), t.order());
  typename TruncatedSeries<Scalar>::Coeffs c = TruncatedSeries<Scalar>::Coeffs::Zero(n + 1);
  for (Eigen::Index i = 0; i <= n; ++i) {
    for (Eigen::Index j = 0; i + j <= n; ++j) c(i + j) += s.coeffs()(i) * t.coeffs()(j);
  }
  return TruncatedSeries<Scalar>(std::move(c));
}

template <typename Scalar>
TruncatedSeries<Scalar> operator*(const TruncatedSeries<Scalar> &s, const TruncatedSeries<Scalar> &t) {
  return multiply(s, t);
}

/// Coefficients of s(t(x)); t must vanish at the origin.
template <typename Scalar>
TruncatedSeries<Scalar> compose(const TruncatedSeries<Scalar> &s, const TruncatedSeries<Scalar> &t) {
  if (t[0] != Scalar(0)) {
    throw Error(ErrorKind::NonzeroInnerConstant, "inner series of a composition must vanish at 0");
  }
  const Eigen::Index n = std::min(s.order(), t.order());
  const TruncatedSeries<Scalar> inner = t.truncated(n);
  TruncatedSeries<Scalar> acc = TruncatedSeries<Scalar>::constant(s[n], n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    acc = multiply(acc, inner) + TruncatedSeries<Scalar>::constant(s[k], n);
  }
  return acc;
}

template <typename Scalar>
TruncatedSeries<Scalar> derivative(const TruncatedSeries<Scalar> &s) {
  if (s.order() == 0) return TruncatedSeries<Scalar>::constant(Scalar(0), 0);
  typename TruncatedSeries<Scalar>::Coeffs c(s.order());
  for (Eigen::Index k = 1; k <= s.order(); ++k) c(k - 1) = Scalar(k) * s.coeffs()(k);
  return TruncatedSeries<Scalar>(std::move(c));
}

/// phi(x) = (f(x) - a_0) / a_1, the series the reversion is taken of.
template <typename Scalar>
TruncatedSeries<Scalar> normalized(const TruncatedSeries<Scalar> &s) {
  if (s[1] == Scalar(0)) {
    throw Error(ErrorKind::ZeroLinearCoefficient, "a_1 must be nonzero");
  }
  typename TruncatedSeries<Scalar>::Coeffs c = s.coeffs() / s[1];
  c(0) = Scalar(0);
  return TruncatedSeries<Scalar>(std::move(c));
}

/// Compositional inverse: x = phi + b_2 phi^2 + ... with phi = (f - a_0)/a_1.
///
/// Solved order by order: with b_n still zero, the phi^n coefficient of
/// normalized(s)(b(phi)) is exactly -b_n.
template <typename Scalar>
TruncatedSeries<Scalar> reversion(const TruncatedSeries<Scalar> &s) {
  const TruncatedSeries<Scalar> p = normalized(s);
  typename TruncatedSeries<Scalar>::Coeffs b = TruncatedSeries<Scalar>::identity(p.order()).coeffs();
  for (Eigen::Index n = 2; n <= p.order(); ++n) {
    b(n) = -compose(p, TruncatedSeries<Scalar>(b))[n];
  }
  return TruncatedSeries<Scalar>(std::move(b));
}

/// beta(f) = df/dx written as a series in phi = (f - a_0)/a_1.
template <typename Scalar>
TruncatedSeries<Scalar> beta_series(const TruncatedSeries<Scalar> &s) {
  if (s.order() < 1 || s[1] == Scalar(0)) {
    throw Error(ErrorKind::ZeroLinearCoefficient, "a_1 must be nonzero");
  }
  return compose(derivative(s), reversion(s));
}

}  // namespace rgresum
