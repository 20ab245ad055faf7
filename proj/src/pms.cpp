#include "rgresum/pms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rgresum/approximants.hpp"
#include "rgresum/numerics.hpp"

namespace rgresum {

std::string_view to_string(PmsModel model) {
  return model == PmsModel::PartitionPhi4 ? "partition" : "oscillator";
}

std::optional<PmsModel> parse_pms_model(std::string_view name) {
  if (name == "partition") return PmsModel::PartitionPhi4;
  if (name == "oscillator") return PmsModel::QuarticOscillator;
  return std::nullopt;
}

PmsRelation::PmsRelation(PmsModel model, double p) : model_(model), p_(p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorKind::DomainError, "trial parameter p must be positive");
  }
}

std::optional<double> PmsRelation::g_c() const {
  if (model_ != PmsModel::QuarticOscillator) return std::nullopt;
  return 1.0 / (9.0 * std::numbers::sqrt3 * p_);
}

double relation_g_of_x(const PmsRelation &rel, TrialPoint t) {
  if (!(t.x >= 0.0 && t.complement > 0.0)) {
    throw Error(ErrorKind::DomainError, "trial variable must lie in [0, 1)");
  }
  if (rel.model() == PmsModel::PartitionPhi4) {
    return 2.0 / (5.0 * rel.p()) * t.x / (t.complement * t.complement);
  }
  return t.x / (6.0 * rel.p() * t.complement * std::sqrt(t.complement));
}

double relation_g_of_x(const PmsRelation &rel, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw Error(ErrorKind::DomainError, "trial variable must lie in [0, 1)");
  return relation_g_of_x(rel, TrialPoint{x, 1.0 - x});
}

namespace {

// Positive root w = sqrt(1 - x) of 6 p g w^3 + w^2 - 1 = 0, from the
// trigonometric (t <= 1) and real-radical (t >= 1) closed forms, t = g/g_c.
// arccos(2t^2 - 1) is written as pi - 2 asin(t) and A_- as 1/A_+.
double oscillator_root(double t) {
  constexpr double kHalfSqrt3 = 0.5 * std::numbers::sqrt3;
  if (t <= 1.0) {
    const double b = 2.0 / 3.0 * std::asin(t);
    const double half = std::sin(0.5 * b);
    return kHalfSqrt3 / t * (std::numbers::sqrt3 * std::sin(b) - 2.0 * half * half);
  }
  const double q = t + std::sqrt((t - 1.0) * (t + 1.0));
  const double a_plus = std::cbrt(q * q);
  return kHalfSqrt3 / t * (a_plus + 1.0 / a_plus - 1.0);
}

}  // namespace

TrialPoint invert_relation(const PmsRelation &rel, double g) {
  if (std::isnan(g)) throw Error(ErrorKind::DomainError, "coupling is NaN");
  if (g < 0.0) throw Error(ErrorKind::NegativeCoupling, "coupling must be non-negative");
  if (!std::isfinite(g)) throw Error(ErrorKind::DomainError, "coupling must be finite");
  if (g == 0.0) return {0.0, 1.0};

  const double p = rel.p();
  if (rel.model() == PmsModel::PartitionPhi4) {
    const double s = std::sqrt(1.0 + 10.0 * p * g);
    const double den = 1.0 + 5.0 * p * g + s;
    return {5.0 * p * g / den, (1.0 + s) / den};
  }
  const double w = oscillator_root(g / *rel.g_c());
  const double x = std::clamp(6.0 * p * g * w * w * w, 0.0, 1.0);
  return {x, w * w};
}

Series derived_bracket_series(const PmsRelation &rel) {
  const double p = rel.p();
  if (rel.model() == PmsModel::PartitionPhi4) {
    return Series{1.0, 0.5 - 0.3 / p, 0.375 - 0.75 / p + 0.525 / (p * p)};
  }
  const double u = 1.0 - 1.0 / p;
  return Series{1.0, -0.5 + 0.25 / p, -0.125 * (u * u + 1.0 / (6.0 * p * p))};
}

double bracket_prefactor(PmsModel model, TrialPoint t) {
  if (model == PmsModel::PartitionPhi4) return std::sqrt(t.complement);
  return 0.5 / std::sqrt(t.complement);
}

namespace {

// The curly bracket of the improved approximant as a function of x.
double improved_bracket(PmsModel model, double p, double x) {
  if (model == PmsModel::PartitionPhi4) {
    const double k = 1.0 + 2.5 * (p - 1.0);
    const double l = 1.0 + 2.5 * (p - 1.0) * (p - 1.0);
    return 1.0 + 2.0 / 15.0 * k * k / l * std::expm1(1.5 * l / (p * k) * x);
  }
  const double m = 2.0 * p - 1.0;
  const double l = 1.0 + 6.0 * (p - 1.0) * (p - 1.0);
  return 1.0 - 1.5 * m * m / l * std::expm1(l / (6.0 * p * m) * x);
}

void require_oscillator_p(const PmsRelation &rel) {
  if (rel.model() == PmsModel::QuarticOscillator && !(rel.p() > 0.5)) {
    throw Error(ErrorKind::DomainError, "oscillator approximant needs p > 1/2");
  }
}

}  // namespace

double improved_rg_value(const PmsRelation &rel, double g) {
  require_oscillator_p(rel);
  const TrialPoint t = invert_relation(rel, g);
  const double v = bracket_prefactor(rel.model(), t) * improved_bracket(rel.model(), rel.p(), t.x);
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::DomainError, "improved approximant not finite for p=" +
                                            std::to_string(rel.p()));
  }
  return v;
}

double pipeline_equivalence_residual(const PmsRelation &rel, double g) {
  const double direct = improved_rg_value(rel, g);
  const TrialPoint t = invert_relation(rel, g);
  const FittedApproximant beta2 = fit(derived_bracket_series(rel), ApproximantKind::Beta2);
  return std::abs(direct - bracket_prefactor(rel.model(), t) * eval(beta2, t.x));
}

double improved_strong_leading(const PmsRelation &rel) {
  require_oscillator_p(rel);
  const double p = rel.p();
  if (rel.model() == PmsModel::PartitionPhi4) {
    // sqrt(1 - x) ~ (2/(5 p g))^{1/4} as x -> 1
    return std::pow(2.0 / (5.0 * p), 0.25) * improved_bracket(rel.model(), p, 1.0);
  }
  // (1 - x)^{-1/2} / 2 ~ (3 p g / 4)^{1/3} as x -> 1
  return std::cbrt(0.75 * p) * improved_bracket(rel.model(), p, 1.0);
}

double strong_matching_residual(PmsModel model, double p, double target_leading_coeff) {
  return improved_strong_leading(PmsRelation(model, p)) / target_leading_coeff - 1.0;
}

std::pair<double, double> fit_p_bracket(PmsModel model) {
  return model == PmsModel::PartitionPhi4 ? std::pair{0.65, 5.0} : std::pair{0.55, 5.0};
}

double fit_p(PmsModel model, double target_leading_coeff) {
  if (!(target_leading_coeff > 0.0)) {
    throw Error(ErrorKind::DomainError, "target strong-coupling coefficient must be positive");
  }
  auto residual = [&](double p) { return strong_matching_residual(model, p, target_leading_coeff); };
  const auto [lo, hi] = fit_p_bracket(model);
  return find_root(residual, RootBracket::make(residual, lo, hi), 1e-12);
}

double modified_series_value(PmsModel model, double g, double x, ModifiedOrder order) {
  if (!(x >= 0.0 && x < 1.0)) throw Error(ErrorKind::DomainError, "trial variable must lie in [0, 1)");
  if (!(g >= 0.0)) throw Error(ErrorKind::DomainError, "coupling must be non-negative");
  const double c = 1.0 - x;
  if (model == PmsModel::PartitionPhi4) {
    const double s = std::sqrt(c);
    const double first = s * (1.0 + 0.5 * x - 0.75 * g * c * c);
    if (order == ModifiedOrder::First) return first;
    return first + s * (0.375 * x * x - 15.0 / 8.0 * g * x * c * c + 105.0 / 32.0 * g * g * c * c * c * c);
  }
  const double c32 = c * std::sqrt(c);
  const double first = 0.5 * (1.0 - 0.5 * x + 1.5 * c32 * g) / std::sqrt(c);
  if (order == ModifiedOrder::First) return first;
  const double d = x - 6.0 * c32 * g;
  return first - (d * d + 6.0 * c * c * c * g * g) / (16.0 * std::sqrt(c));
}

double StrongCouplingAsym::operator()(double g) const {
  double v = leading_coeff * std::pow(g, leading_exponent);
  for (const auto &[coeff, exponent] : corrections) v += coeff * std::pow(g, exponent);
  return v;
}

}  // namespace rgresum
