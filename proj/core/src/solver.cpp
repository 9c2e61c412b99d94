#include "sliring/solver.hpp"

#include <algorithm>
#include <cmath>

#include "sliring/error.hpp"
#include "sliring/sli.hpp"

namespace sliring {

LinearEquation::LinearEquation(RingElement a_, RingElement b_, RingElement c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  require_same_basis(a, b);
  require_same_basis(a, c);
}

const char* to_string(SolutionKind kind) noexcept {
  switch (kind) {
    case SolutionKind::unique: return "unique";
    case SolutionKind::family: return "family";
    case SolutionKind::inconsistent: return "inconsistent";
  }
  return "unknown";
}

std::vector<std::vector<double>> Solution::free_directions() const {
  std::vector<std::vector<double>> dirs;
  if (kind != SolutionKind::family || !value) return dirs;
  const std::size_t n = value->size();
  const auto& cores = value->basis()->cores();
  for (std::size_t i = core_free ? 0 : 1; i < n; ++i) {
    std::vector<double> d(n, 0.0);
    d[i] = 1.0;
    if (!core_free) d[0] = -cores[i];
    dirs.push_back(std::move(d));
  }
  return dirs;
}

RingElement apply_linear(const RingElement& a, const RingElement& b, const RingElement& x) {
  require_same_basis(a, b);
  return add_psi(cross_psi(a, x), b);
}

RingElement apply_inverse(const RingElement& a, const RingElement& b, const RingElement& y) {
  require_same_basis(a, b);
  const RingElement a_inv = inv_psi(a);
  return sub_psi(cross_psi(a_inv, y), cross_psi(a_inv, b));
}

Solution solve(const LinearEquation& eq) {
  Solution sol;
  const RingElement b_bar = sub_psi(eq.c, eq.b);

  if (is_invertible(eq.a)) {
    sol.kind = SolutionKind::unique;
    sol.value = cross_psi(inv_psi(eq.a), b_bar);
    sol.residual = coord_distance(apply_linear(eq.a, eq.b, *sol.value), eq.c);
    return sol;
  }

  // Least-squares ratio x̄ = ⟨B̄, A⟩ / ⟨A, A⟩.
  double dot = 0.0, norm_sq = 0.0;
  for (std::size_t i = 0; i < eq.a.size(); ++i) {
    dot += b_bar[i] * eq.a[i];
    norm_sq += eq.a[i] * eq.a[i];
  }
  const double ratio = norm_sq > 0.0 ? dot / norm_sq : 0.0;
  double residual = 0.0;
  for (std::size_t i = 0; i < eq.a.size(); ++i) {
    residual = std::max(residual, std::abs(b_bar[i] - ratio * eq.a[i]));
  }
  sol.residual = residual;
  if (residual <= kResidualTolerance) {
    sol.kind = SolutionKind::family;
    sol.family_core = ratio;
    sol.core_free = norm_sq == 0.0;
    sol.value = RingElement::crisp(eq.a.basis(), ratio);
  } else {
    sol.kind = SolutionKind::inconsistent;
  }
  return sol;
}

LevelwiseReport levelwise_system(const RingElement& a, const RingElement& x,
                                 const RingElement& b_bar, const LevelGrid& grid) {
  require_same_basis(a, x);
  require_same_basis(a, b_bar);
  const SliBasis& basis = *a.basis();
  const double a_core = a.core_value();
  const double x_core = x.core_value();

  std::vector<double> coeff(basis.size());
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = x_core * a[i] + a_core * x[i];

  const FuzzyNumber rhs = psi_realize(b_bar);
  LevelwiseReport report;
  report.levels.reserve(grid.size());
  for (double alpha : grid.levels()) {
    LevelResidual row;
    row.alpha = alpha;
    Interval lhs = coeff[0] * alpha_cut(basis.element(0), alpha);
    for (std::size_t i = 1; i < coeff.size(); ++i) {
      lhs = lhs + coeff[i] * alpha_cut(basis.element(i), alpha);
    }
    row.lhs = lhs + (-(a_core * x_core));
    row.rhs = alpha_cut(rhs, alpha);
    row.deviation = endpoint_distance(row.lhs, row.rhs);
    report.max_deviation = std::max(report.max_deviation, row.deviation);
    report.levels.push_back(row);
  }
  return report;
}

}  // namespace sliring
