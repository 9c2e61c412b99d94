#pragma once

#include <optional>
#include <vector>

#include "sliring/fuzzy_number.hpp"
#include "sliring/level_grid.hpp"
#include "sliring/ring.hpp"

namespace sliring {

// Tolerance on coordinate residuals when accepting a solution or deciding
// that C −ψ B is a multiple of A in the core-zero case.
inline constexpr double kResidualTolerance = 1e-9;

// A ⊙ψ X +ψ B = C over one basis.
struct LinearEquation {
  RingElement a;
  RingElement b;
  RingElement c;

  // Throws ErrorKind::basis_mismatch unless all three share a basis.
  LinearEquation(RingElement a, RingElement b, RingElement c);
};

enum class SolutionKind { unique, family, inconsistent };

const char* to_string(SolutionKind kind) noexcept;

struct Solution {
  SolutionKind kind = SolutionKind::inconsistent;
  // unique: the solution. family: the canonical representative crisp x̄.
  std::optional<RingElement> value;
  // family: every X with core_value == family_core solves the equation.
  double family_core = 0.0;
  // family with A ≡ 0 and C ≡ B: the core is unconstrained too.
  bool core_free = false;
  // unique: max-norm of F_{A,B}(X) − C. family/inconsistent: max-norm of
  // (C − B) − x̄·A for the least-squares x̄.
  double residual = 0.0;

  // Coordinate directions that can be added to `value` without leaving the
  // solution set (family only; empty otherwise). Each keeps the core fixed:
  // eᵢ − aᵢe₁ for i ≥ 2, or every unit vector when core_free.
  std::vector<std::vector<double>> free_directions() const;
};

// F_{A,B}(X) = A ⊙ψ X +ψ B
RingElement apply_linear(const RingElement& a, const RingElement& b, const RingElement& x);

// F⁻¹_{A,B}(Y) = A⁻¹ψ ⊙ψ Y −ψ A⁻¹ψ ⊙ψ B. Throws ErrorKind::no_inverse when
// core(A) is zero.
RingElement apply_inverse(const RingElement& a, const RingElement& b, const RingElement& y);

// Unique solution A⁻¹ψ ⊙ψ (C −ψ B) when core(A) ≠ 0. Otherwise A ⊙ψ X = x̄·A
// depends on X only through its core x̄, so the equation is x̄·A = C −ψ B:
// a family when C −ψ B is proportional to A, inconsistent when it is not.
Solution solve(const LinearEquation& eq);

struct LevelResidual {
  double alpha = 0.0;
  Interval lhs;  // Σᵢ (x̄aᵢ + āxᵢ)[Aᵢ]_α − āx̄
  Interval rhs;  // [B̄]_α
  double deviation = 0.0;  // max endpoint gap
};

struct LevelwiseReport {
  std::vector<LevelResidual> levels;
  double max_deviation = 0.0;
};

// Evaluates A ⊙ψ X = B̄ as the family of interval equations
//   Σᵢ (x̄aᵢ + āxᵢ)[Aᵢ]_α − āx̄ = [B̄]_α
// at every level of `grid`, with aᵢ, xᵢ the coordinates of A and X.
LevelwiseReport levelwise_system(const RingElement& a, const RingElement& x,
                                 const RingElement& b_bar, const LevelGrid& grid);

}  // namespace sliring
