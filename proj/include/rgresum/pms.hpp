#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rgresum/series.hpp"

namespace rgresum {

enum class PmsModel { PartitionPhi4, QuarticOscillator };

std::string_view to_string(PmsModel model);
/// Accepts "partition" and "oscillator".
std::optional<PmsModel> parse_pms_model(std::string_view name);

/// A point of the trial variable together with its complement 1 - x.
///
/// The complement is produced directly by the inversion formulas, so it keeps
/// full relative precision when x is close to 1 (strong coupling).
struct TrialPoint {
  double x;
  double complement;
};

/// The coupling/trial-variable relation with exponent-matching parameter p:
///   partition:  g = 2/(5p) * x / (1 - x)^2
///   oscillator: g = 1/(6p) * x / (1 - x)^{3/2}
class PmsRelation {
public:
  PmsRelation(PmsModel model, double p);

  PmsModel model() const { return model_; }
  double p() const { return p_; }

  /// Coupling at which the oscillator inversion switches from the
  /// trigonometric to the real-radical branch, 1/(9 sqrt(3) p).
  std::optional<double> g_c() const;

private:
  PmsModel model_;
  double p_;
};

double relation_g_of_x(const PmsRelation &rel, double x);
double relation_g_of_x(const PmsRelation &rel, TrialPoint t);

TrialPoint invert_relation(const PmsRelation &rel, double g);

/// Second-order modified series divided by its prefactor, after the
/// relation is substituted: 1 + A x + B x^2.
Series derived_bracket_series(const PmsRelation &rel);

/// sqrt(1 - x) for the partition integral, (1 - x)^{-1/2} / 2 for the oscillator.
double bracket_prefactor(PmsModel model, TrialPoint t);

/// Improved RG approximant: the prefactor times Beta2 applied to the bracket.
double improved_rg_value(const PmsRelation &rel, double g);

/// |improved_rg_value - prefactor * eval(fit(derived_bracket_series, Beta2), x)|.
double pipeline_equivalence_residual(const PmsRelation &rel, double g);

/// Coefficient c in improved_rg_value ~ c * g^{leading exponent} as g -> inf.
double improved_strong_leading(const PmsRelation &rel);

/// improved_strong_leading(p) / target - 1.
double strong_matching_residual(PmsModel model, double p, double target_leading_coeff);

/// p for which the strong-coupling coefficient of the improved approximant
/// equals target_leading_coeff.
double fit_p(PmsModel model, double target_leading_coeff);

/// Search interval for fit_p; its lower end sits just above the p at which
/// the closed form is singular (0.6 partition, 0.5 oscillator).
std::pair<double, double> fit_p_bracket(PmsModel model);

enum class ModifiedOrder { First = 1, Second = 2 };

/// I_1/I_2 (partition) or e_1/e_2 (oscillator) at arbitrary (g, x).
double modified_series_value(PmsModel model, double g, double x, ModifiedOrder order);

/// leading_coeff * g^leading_exponent + sum c_k g^{e_k}; exponents are absolute.
struct StrongCouplingAsym {
  double leading_coeff;
  double leading_exponent;
  std::vector<std::pair<double, double>> corrections;  // (coefficient, exponent)

  double operator()(double g) const;
};

}  // namespace rgresum
