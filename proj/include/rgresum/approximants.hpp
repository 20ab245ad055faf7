#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rgresum/series.hpp"

namespace rgresum {

enum class ApproximantKind { Taylor2, Taylor3, Beta2, Beta3, X2, Xcf2 };

inline constexpr ApproximantKind kAllApproximantKinds[] = {
    ApproximantKind::Beta2, ApproximantKind::Beta3,   ApproximantKind::X2,
    ApproximantKind::Xcf2,  ApproximantKind::Taylor2, ApproximantKind::Taylor3};

std::string_view to_string(ApproximantKind kind);
std::optional<ApproximantKind> parse_approximant_kind(std::string_view name);

/// Number of input Taylor coefficients (beyond a_0) the kind reproduces.
int series_order(ApproximantKind kind);

// Below this |a_2/a_1| the quadratic-based forms collapse to a_0 + a_1 x.
inline constexpr double kDegenerateRatio = 1e-10;
// Half-width of the excluded band around the continued-fraction pole.
inline constexpr double kPoleGuard = 1e-12;

struct FittedApproximant {
  ApproximantKind kind;
  double a0;
  double a1;
  double a2;
  std::optional<double> a3;        // Beta3 and Taylor3
  std::optional<double> kappa_sq;  // Beta3 only; 3[(a2/a1)^2 - a3/a1], may be negative
  bool degenerate = false;         // |a2/a1| < kDegenerateRatio
  std::string domain_note;
};

FittedApproximant fit(const Series &a, ApproximantKind kind);

/// Closed-form value at x. Throws DomainError outside the kind's domain.
double eval(const FittedApproximant &fa, double x);

/// One approximation-vs-oracle record. Rows that could not be evaluated carry
/// an error message and NaN values.
struct AccuracyRow {
  std::string method;
  double abscissa = 0.0;
  double approx_value = 0.0;
  double oracle_value = 0.0;
  double delta_percent = 0.0;
  std::optional<std::string> error;

  bool valid() const { return !error.has_value(); }
};

/// (approx - oracle) / oracle * 100; NaN when the oracle is zero.
double delta_percent(double approx, double oracle);

AccuracyRow make_row(std::string method, double abscissa, double approx, double oracle);
AccuracyRow make_error_row(std::string method, double abscissa, std::string message);

std::vector<AccuracyRow> delta_table(const Series &a, const std::function<double(double)> &oracle,
                                     std::span<const ApproximantKind> kinds,
                                     std::span<const double> grid);

}  // namespace rgresum
