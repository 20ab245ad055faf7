#include "rgresum/models.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rgresum {

void PartitionOracleConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-8)) {
    throw Error(ErrorKind::ConfigError, "partition rel_tol must lie in (0, 1e-8]");
  }
  if (!(tail_cutoff > 0.0 && tail_cutoff <= 1e-14)) {
    throw Error(ErrorKind::ConfigError, "partition tail_cutoff must lie in (0, 1e-14]");
  }
}

double default_basis_frequency(double g) { return std::cbrt(1.0 + 3.0 * g); }

void OscillatorOracleConfig::validate() const {
  if (basis_size < 16) throw Error(ErrorKind::ConfigError, "basis_size must be at least 16");
  if (basis_frequency == nullptr) throw Error(ErrorKind::ConfigError, "basis_frequency is null");
  if (!(convergence_tol > 0.0)) throw Error(ErrorKind::ConfigError, "convergence_tol must be positive");
  if (max_basis_size < basis_size) {
    throw Error(ErrorKind::ConfigError, "max_basis_size must be at least basis_size");
  }
}

double partition_exact(double g, const PartitionOracleConfig &cfg) {
  cfg.validate();
  if (g < 0.0) throw Error(ErrorKind::NegativeCoupling, "coupling must be non-negative");
  if (!std::isfinite(g)) throw Error(ErrorKind::DomainError, "coupling must be finite");
  // phi^2 + g phi^4 = -ln(tail_cutoff) at phi = L
  const double t = -std::log(cfg.tail_cutoff);
  const double l = std::sqrt(2.0 * t / (1.0 + std::sqrt(1.0 + 4.0 * g * t)));
  auto integrand = [g](double phi) {
    const double s = phi * phi;
    return std::exp(-s - g * s * s);
  };
  return 2.0 * std::numbers::inv_sqrtpi * adaptive_quadrature(integrand, 0.0, l, cfg.rel_tol);
}

Series partition_weak_series(int n_terms) {
  if (n_terms < 1) throw Error(ErrorKind::InsufficientOrder, "need at least one term");
  Series::Coeffs c(n_terms);
  c(0) = 1.0;  // Gamma(1/2) / sqrt(pi)
  for (int n = 1; n < n_terms; ++n) {
    // Gamma(2n + 1/2) = (2n - 1/2)(2n - 3/2) Gamma(2n - 3/2)
    c(n) = -c(n - 1) * (2.0 * n - 0.5) * (2.0 * n - 1.5) / n;
  }
  return Series(std::move(c));
}

SymmetricMatrix oscillator_hamiltonian(double g, double omega, int basis_size) {
  // y = (a + a^dagger) / sqrt(2 omega); in the omega basis
  // H = omega (n + 1/2) + (1 - omega^2)/2 y^2 + g y^4.
  const double y2_scale = 1.0 / (2.0 * omega);
  const double y4_scale = y2_scale * y2_scale;
  const double quad = 0.5 * (1.0 - omega * omega);
  SymmetricMatrix h(basis_size);
  for (int i = 0; i < basis_size; ++i) {
    const double n = 2.0 * i;
    const double x2_diag = 2.0 * n + 1.0;
    const double x4_diag = 6.0 * n * n + 6.0 * n + 3.0;
    h.set(i, i, omega * (n + 0.5) + quad * y2_scale * x2_diag + g * y4_scale * x4_diag);
    if (i + 1 < basis_size) {
      const double r2 = std::sqrt((n + 1.0) * (n + 2.0));
      h.set(i + 1, i, quad * y2_scale * r2 + g * y4_scale * (4.0 * n + 6.0) * r2);
    }
    if (i + 2 < basis_size) {
      const double r4 = std::sqrt((n + 1.0) * (n + 2.0) * (n + 3.0) * (n + 4.0));
      h.set(i + 2, i, g * y4_scale * r4);
    }
  }
  return h;
}

double oscillator_exact(double g, const OscillatorOracleConfig &cfg) {
  cfg.validate();
  if (g < 0.0) throw Error(ErrorKind::NegativeCoupling, "coupling must be non-negative");
  if (!std::isfinite(g)) throw Error(ErrorKind::DomainError, "coupling must be finite");
  constexpr double kJacobiTol = 1e-13;
  const double omega = cfg.basis_frequency(g);
  int n = cfg.basis_size;
  double previous = symmetric_eigen_smallest(oscillator_hamiltonian(g, omega, n), kJacobiTol);
  while (2 * n <= cfg.max_basis_size) {
    n *= 2;
    const double current = symmetric_eigen_smallest(oscillator_hamiltonian(g, omega, n), kJacobiTol);
    if (std::abs(current - previous) <= cfg.convergence_tol * std::max(1.0, std::abs(current))) {
      return current;
    }
    previous = current;
  }
  throw Error(ErrorKind::ConvergenceFailure,
              "oscillator ground energy not stable under basis doubling at g=" + std::to_string(g));
}

Series oscillator_weak_series() {
  return Series{0.5, 0.75, -21.0 / 8.0, 333.0 / 16.0, -30885.0 / 128.0};
}

StrongCouplingAsym strong_asym(PmsModel model) {
  if (model == PmsModel::PartitionPhi4) {
    const double scale = 0.5 * std::numbers::inv_sqrtpi;
    return {kGammaQuarter * scale, -0.25, {{-kGammaThreeQuarters * scale, -0.75}}};
  }
  return {kOscillatorStrongLeading, 1.0 / 3.0, {{0.14367, -1.0 / 3.0}, {-0.0088, -1.0}}};
}

double exact_value(PmsModel model, double g) {
  return model == PmsModel::PartitionPhi4 ? partition_exact(g) : oscillator_exact(g);
}

Series three_term_series(PmsModel model) {
  return model == PmsModel::PartitionPhi4 ? partition_weak_series(3)
                                          : oscillator_weak_series().truncated(2);
}

std::vector<AccuracyRow> unit_coupling_delta_suite(PmsModel model) {
  constexpr ApproximantKind kinds[] = {ApproximantKind::Taylor2, ApproximantKind::Beta2,
                                       ApproximantKind::X2, ApproximantKind::Xcf2};
  constexpr double grid[] = {1.0};
  return delta_table(three_term_series(model), [model](double g) { return exact_value(model, g); },
                     kinds, grid);
}

std::vector<AccuracyRow> error_profile(PmsModel model, double p, std::span<const double> g_grid) {
  std::vector<AccuracyRow> rows;
  rows.reserve(g_grid.size());
  const PmsRelation rel(model, p);
  for (double g : g_grid) {
    try {
      if (!(g > 0.0)) throw Error(ErrorKind::DomainError, "grid couplings must be positive");
      rows.push_back(make_row(kImprovedMethod, g, improved_rg_value(rel, g), exact_value(model, g)));
    } catch (const Error &e) {
      if (e.is_convergence()) throw;
      rows.push_back(make_error_row(kImprovedMethod, g, e.what()));
    }
  }
  return rows;
}

std::vector<ReferenceFunction> reference_functions() {
  return {
      {"ln(1+x)", Series{0.0, 1.0, -0.5, 1.0 / 3.0}, [](double x) { return std::log1p(x); }},
      {"x/sqrt(1+x)", Series{0.0, 1.0, -0.5, 0.375}, [](double x) { return x / std::sqrt(1.0 + x); }},
  };
}

}  // namespace rgresum
