#pragma once

#include <span>
#include <string>
#include <vector>

#include "rgresum/approximants.hpp"
#include "rgresum/numerics.hpp"
#include "rgresum/pms.hpp"
#include "rgresum/series.hpp"

namespace rgresum {

inline constexpr double kGammaQuarter = 3.625609908221908;       // Gamma(1/4)
inline constexpr double kGammaThreeQuarters = 1.225416702465178;  // Gamma(3/4)
inline constexpr double kOscillatorStrongLeading = 0.667986;

struct PartitionOracleConfig {
  double rel_tol = 1e-12;
  double tail_cutoff = 1e-16;  // integrand value at which the domain is cut

  void validate() const;
};

/// (1 + 3g)^{1/3}
double default_basis_frequency(double g);

struct OscillatorOracleConfig {
  int basis_size = 64;  // even harmonic-oscillator states
  double (*basis_frequency)(double g) = &default_basis_frequency;
  double convergence_tol = 1e-10;  // relative to max(1, |e|), under basis doubling
  int max_basis_size = 1024;

  void validate() const;
};

/// (1/sqrt(pi)) int exp(-phi^2 - g phi^4) dphi by adaptive quadrature.
double partition_exact(double g, const PartitionOracleConfig &cfg = {});

/// First n_terms coefficients (-1)^n Gamma(2n + 1/2) / (sqrt(pi) n!).
Series partition_weak_series(int n_terms);

/// Hamiltonian -1/2 d^2/dy^2 + 1/2 y^2 + g y^4 on the first basis_size even
/// states of the harmonic oscillator with frequency omega.
SymmetricMatrix oscillator_hamiltonian(double g, double omega, int basis_size);

/// Ground-state energy e(g) = E_0/omega at omega = 1, converged under basis doubling.
double oscillator_exact(double g, const OscillatorOracleConfig &cfg = {});

/// (1/2, 3/4, -21/8, 333/16, -30885/128)
Series oscillator_weak_series();

StrongCouplingAsym strong_asym(PmsModel model);

/// Default-configured exact oracle for either model.
double exact_value(PmsModel model, double g);

/// Three-term weak-coupling series of either model.
Series three_term_series(PmsModel model);

/// Delta at g = 1 of Taylor2, Beta2, X2, Xcf2 built from three weak-coupling terms.
std::vector<AccuracyRow> unit_coupling_delta_suite(PmsModel model);

inline constexpr const char *kImprovedMethod = "ImprovedBeta2";

/// Relative error of improved_rg_value(p) against the exact oracle on a grid.
std::vector<AccuracyRow> error_profile(PmsModel model, double p, std::span<const double> g_grid);

/// Smooth one-to-one test functions with their first four Taylor coefficients.
struct ReferenceFunction {
  std::string name;
  Series series;
  double (*value)(double x);
};

/// ln(1 + x) and x / sqrt(1 + x).
std::vector<ReferenceFunction> reference_functions();

}  // namespace rgresum
