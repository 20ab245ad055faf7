#include "rgresum/rg_flow.hpp"

#include <cmath>
#include <string>

#include "rgresum/numerics.hpp"

namespace rgresum {

namespace {

constexpr double kRootTol = 1e-14;
constexpr int kMaxBracketExpansions = 200;
constexpr int kMaxPoleApproach = 60;

bool same_sign(double u, double v) { return (u > 0.0) == (v > 0.0); }

}  // namespace

RgFlow::RgFlow(const Series &a, std::optional<Eigen::Index> beta_order, double rel_tol)
    : beta_(beta_series(a)), a0_(a[0]), a1_(a[1]), rel_tol_(rel_tol) {
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::DomainError, "rel_tol must be positive");
  if (beta_order) {
    if (*beta_order < 0) throw Error(ErrorKind::DomainError, "beta order must be non-negative");
    beta_ = beta_.truncated(*beta_order);
  }
}

double RgFlow::beta(double f) const { return beta_((f - a0_) / a1_); }

double RgFlow::travel(double from, double to) const {
  return adaptive_quadrature([this](double t) { return 1.0 / beta(t); }, from, to, rel_tol_);
}

double RgFlow::X(double f) const { return travel(a0_, f); }

double RgFlow::beta_zero_between(double lo, double hi) const {
  if (hi < lo) std::swap(lo, hi);
  auto b = [this](double f) { return beta(f); };
  return find_root(b, RootBracket::make(b, lo, hi), 1e-16);
}

double RgFlow::F(double x, double f) const {
  if (x == 0.0) return f;
  const double b0 = beta(f);
  if (b0 == 0.0 || !std::isfinite(b0)) {
    throw Error(ErrorKind::ConvergenceFailure, "beta vanishes at the starting value");
  }
  // travel(f, y) - x is -x at y = f and changes sign once y passes F(x; f).
  auto residual = [&](double y) { return travel(f, y) - x; };
  const double dir = same_sign(x, b0) ? 1.0 : -1.0;
  const double start_sign = -x;

  auto solve = [&](double p, double fp, double q, double fq) {
    if (fq == 0.0) return q;
    RootBracket br = p < q ? RootBracket{p, q, fp, fq} : RootBracket{q, p, fq, fp};
    return find_root(residual, br, kRootTol);
  };

  double inner = f;
  double inner_res = start_sign;
  double step = std::abs(b0 * x);
  if (step == 0.0) step = 1e-8 * std::max(1.0, std::abs(f));
  for (int iter = 0; iter < kMaxBracketExpansions; ++iter) {
    const double cand = inner + dir * step;
    const double bc = beta(cand);
    if (bc == 0.0 || !same_sign(bc, b0)) {
      // X diverges where beta vanishes, so the target lies before that zero.
      const double zero = beta_zero_between(inner, cand);
      const double base = inner;
      for (int k = 1; k <= kMaxPoleApproach; ++k) {
        const double y = zero - (zero - base) * std::ldexp(1.0, -k);
        if (y == zero || y == inner) break;
        const double ry = residual(y);
        if (ry == 0.0 || !same_sign(ry, start_sign)) return solve(inner, inner_res, y, ry);
        inner = y;
        inner_res = ry;
      }
      throw Error(ErrorKind::ConvergenceFailure,
                  "flow cannot reach x=" + std::to_string(x) + " before beta vanishes");
    }
    const double rc = residual(cand);
    if (rc == 0.0 || !same_sign(rc, start_sign)) return solve(inner, inner_res, cand, rc);
    inner = cand;
    inner_res = rc;
    step *= 2.0;
  }
  throw Error(ErrorKind::ConvergenceFailure, "could not bracket F(x; f)");
}

double generic_rg_value(const Series &a, double x, std::optional<Eigen::Index> beta_order) {
  return RgFlow(a, beta_order).F(x, a[0]);
}

double check_group_property(const Series &a, double x, double x1) {
  const RgFlow flow(a);
  const double f0 = a[0];
  return std::abs(flow.F(x + x1, f0) - flow.F(x, flow.F(x1, f0)));
}

double check_infinitesimal_operator(const Series &a, double x, double h) {
  const RgFlow flow(a);
  const double f0 = a[0];
  const double dfdx =
      central_difference([&](double s) { return flow.F(s, f0); }, x, h, DerivativeOrder::First);
  const double dfdf =
      central_difference([&](double f) { return flow.F(x, f); }, f0, h, DerivativeOrder::First);
  return std::abs(dfdx - flow.beta(f0) * dfdf);
}

}  // namespace rgresum
