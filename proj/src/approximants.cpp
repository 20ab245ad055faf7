#include "rgresum/approximants.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace rgresum {

std::string_view to_string(ApproximantKind kind) {
  switch (kind) {
    case ApproximantKind::Taylor2: return "Taylor2";
    case ApproximantKind::Taylor3: return "Taylor3";
    case ApproximantKind::Beta2: return "Beta2";
    case ApproximantKind::Beta3: return "Beta3";
    case ApproximantKind::X2: return "X2";
    case ApproximantKind::Xcf2: return "Xcf2";
  }
  return "?";
}

std::optional<ApproximantKind> parse_approximant_kind(std::string_view name) {
  for (ApproximantKind k : kAllApproximantKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

int series_order(ApproximantKind kind) {
  return kind == ApproximantKind::Beta3 || kind == ApproximantKind::Taylor3 ? 3 : 2;
}

namespace {

std::string domain_note_for(ApproximantKind kind) {
  switch (kind) {
    case ApproximantKind::Taylor2:
    case ApproximantKind::Taylor3: return "all real x";
    case ApproximantKind::Beta2: return "all real x (overflow aside)";
    case ApproximantKind::Beta3: return "x before the first zero of 1 - (a2/a1) x tanh(kx)/(kx)";
    case ApproximantKind::X2: return "1 - 4 (a2/a1) x >= 0";
    case ApproximantKind::Xcf2: return "|1 - (a2/a1) x| >= 1e-12";
  }
  return {};
}

// tanh(t)/t as a function of y = t^2 (y >= 0).
double tanh_ratio(double y) {
  if (y < 1e-4) return 1.0 - y / 3.0 + 2.0 * y * y / 15.0 - 17.0 * y * y * y / 315.0;
  const double t = std::sqrt(y);
  return std::tanh(t) / t;
}

// sin(t)/t and cos(t) as functions of y = -t^2 (y <= 0).
std::pair<double, double> sin_ratio_cos(double y) {
  if (y > -1e-4) {
    return {1.0 + y / 6.0 + y * y / 120.0 + y * y * y / 5040.0,
            1.0 + y / 2.0 + y * y / 24.0 + y * y * y / 720.0};
  }
  const double t = std::sqrt(-y);
  return {std::sin(t) / t, std::cos(t)};
}

double finite_or_throw(double v, ApproximantKind kind, double x) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::DomainError,
                std::string(to_string(kind)) + " overflows at x=" + std::to_string(x));
  }
  return v;
}

}  // namespace

FittedApproximant fit(const Series &a, ApproximantKind kind) {
  if (a.order() < series_order(kind)) {
    throw Error(ErrorKind::InsufficientOrder, std::string(to_string(kind)) + " needs order " +
                                                  std::to_string(series_order(kind)));
  }
  if (a[1] == 0.0) throw Error(ErrorKind::ZeroLinearCoefficient, "a_1 must be nonzero");

  FittedApproximant fa{kind, a[0], a[1], a[2], std::nullopt, std::nullopt, false,
                       domain_note_for(kind)};
  const double r = fa.a2 / fa.a1;
  fa.degenerate = std::abs(r) < kDegenerateRatio;
  if (series_order(kind) == 3) fa.a3 = a[3];
  if (kind == ApproximantKind::Beta3) fa.kappa_sq = 3.0 * (r * r - a[3] / fa.a1);
  return fa;
}

double eval(const FittedApproximant &fa, double x) {
  const double r = fa.a2 / fa.a1;
  switch (fa.kind) {
    case ApproximantKind::Taylor2: return fa.a0 + x * (fa.a1 + x * fa.a2);
    case ApproximantKind::Taylor3: return fa.a0 + x * (fa.a1 + x * (fa.a2 + x * fa.a3.value()));

    case ApproximantKind::Beta2: {
      if (fa.degenerate) return fa.a0 + fa.a1 * x;
      return finite_or_throw(fa.a0 + fa.a1 * std::expm1(2.0 * r * x) / (2.0 * r), fa.kind, x);
    }

    case ApproximantKind::Beta3: {
      // kappa coth(kappa x) continued evenly in kappa: tanh branch for
      // kappa^2 >= 0, trigonometric branch otherwise.
      const double y = fa.kappa_sq.value() * x * x;
      double num;
      double den;
      if (y >= 0.0) {
        const double t = tanh_ratio(y);
        num = x * t;
        den = 1.0 - r * x * t;
      } else {
        const auto [s, c] = sin_ratio_cos(y);
        num = x * s;
        den = c - r * x * s;
      }
      if (std::abs(den) < kPoleGuard) {
        throw Error(ErrorKind::DomainError, "Beta3 pole at x=" + std::to_string(x));
      }
      return finite_or_throw(fa.a0 + fa.a1 * num / den, fa.kind, x);
    }

    case ApproximantKind::X2: {
      if (fa.degenerate) return fa.a0 + fa.a1 * x;
      const double disc = 1.0 - 4.0 * r * x;
      if (disc < 0.0) {
        throw Error(ErrorKind::DomainError, "X2 undefined where 1 - 4(a2/a1)x < 0, x=" +
                                                std::to_string(x));
      }
      return fa.a0 + 2.0 * fa.a1 * x / (1.0 + std::sqrt(disc));
    }

    case ApproximantKind::Xcf2: {
      if (fa.degenerate) return fa.a0 + fa.a1 * x;
      const double den = 1.0 - r * x;
      if (std::abs(den) < kPoleGuard) {
        throw Error(ErrorKind::DomainError, "Xcf2 pole at x=" + std::to_string(x));
      }
      return fa.a0 + fa.a1 * x / den;
    }
  }
  throw Error(ErrorKind::DomainError, "unknown approximant kind");
}

double delta_percent(double approx, double oracle) {
  if (oracle == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (approx - oracle) / oracle * 100.0;
}

AccuracyRow make_row(std::string method, double abscissa, double approx, double oracle) {
  return AccuracyRow{std::move(method), abscissa, approx, oracle, delta_percent(approx, oracle),
                     std::nullopt};
}

AccuracyRow make_error_row(std::string method, double abscissa, std::string message) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  return AccuracyRow{std::move(method), abscissa, nan, nan, nan, std::move(message)};
}

std::vector<AccuracyRow> delta_table(const Series &a, const std::function<double(double)> &oracle,
                                     std::span<const ApproximantKind> kinds,
                                     std::span<const double> grid) {
  std::vector<AccuracyRow> rows;
  rows.reserve(kinds.size() * grid.size());
  for (ApproximantKind kind : kinds) {
    std::optional<FittedApproximant> fa;
    std::string fit_error;
    try {
      fa = fit(a, kind);
    } catch (const Error &e) {
      fit_error = e.what();
    }
    for (double x : grid) {
      if (!fa) {
        rows.push_back(make_error_row(std::string(to_string(kind)), x, fit_error));
        continue;
      }
      try {
        const double approx = eval(*fa, x);
        rows.push_back(make_row(std::string(to_string(kind)), x, approx, oracle(x)));
      } catch (const Error &e) {
        rows.push_back(make_error_row(std::string(to_string(kind)), x, e.what()));
      }
    }
  }
  return rows;
}

}  // namespace rgresum
