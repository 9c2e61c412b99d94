#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "sliring/interval.hpp"
#include "sliring/level_grid.hpp"

namespace sliring {

// Core widths at or below this count as a single point.
inline constexpr double kSingletonTolerance = 1e-9;

// Parametric trapezoidal fuzzy number: membership 0 outside [a, d], 1 on
// [b, c], affine in between.
struct Trapezoid {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

  Trapezoid() = default;
  // Throws ErrorKind::domain unless a ≤ b ≤ c ≤ d (all finite).
  Trapezoid(double a, double b, double c, double d);

  bool has_singleton_core() const noexcept { return b == c; }
  // Exact α-cut of the parametric form.
  Interval cut(double alpha) const noexcept;

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

// Fuzzy number sampled on a level grid: [F]_{α_k} = [lower[k], upper[k]].
//
// Cuts are nested: lower is non-decreasing and upper non-increasing in k.
// Construction checks this with a relative slack of 1e-12 and snaps
// violations inside the slack, so interpolation noise never produces an
// invalid value. Instances are immutable and the grid is shared.
class FuzzyNumber {
 public:
  FuzzyNumber(LevelGrid grid, std::vector<double> lower, std::vector<double> upper);
  FuzzyNumber(std::shared_ptr<const LevelGrid> grid, std::vector<double> lower,
              std::vector<double> upper);

  static FuzzyNumber crisp(double x, const LevelGrid& grid = LevelGrid());
  static FuzzyNumber crisp(double x, std::shared_ptr<const LevelGrid> grid);

  const LevelGrid& grid() const noexcept { return *grid_; }
  const std::shared_ptr<const LevelGrid>& shared_grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return lower_.size(); }

  std::span<const double> lower() const noexcept { return lower_; }
  std::span<const double> upper() const noexcept { return upper_; }
  // Cut at grid index k (no interpolation).
  Interval level(std::size_t k) const noexcept;
  double midpoint(std::size_t k) const noexcept { return 0.5 * (lower_[k] + upper_[k]); }

  // Same grid and bitwise-equal endpoints.
  friend bool operator==(const FuzzyNumber& a, const FuzzyNumber& b);

 private:
  std::shared_ptr<const LevelGrid> grid_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

FuzzyNumber make_trapezoid(const Trapezoid& t, const LevelGrid& grid = LevelGrid());
FuzzyNumber make_trapezoid(const Trapezoid& t, std::shared_ptr<const LevelGrid> grid);

// Cut at arbitrary α ∈ [0, 1], linearly interpolated between grid levels.
Interval alpha_cut(const FuzzyNumber& f, double alpha);

Interval core(const FuzzyNumber& f) noexcept;
bool has_singleton_core(const FuzzyNumber& f, double tol = kSingletonTolerance) noexcept;
// The single core point; throws ErrorKind::domain if the core is wider than tol.
double core_point(const FuzzyNumber& f, double tol = kSingletonTolerance);

double diam(const FuzzyNumber& f) noexcept;

// Re-sample onto another grid by interpolation.
FuzzyNumber resample(const FuzzyNumber& f, const std::shared_ptr<const LevelGrid>& grid);

FuzzyNumber minkowski_add(const FuzzyNumber& f, const FuzzyNumber& g);
FuzzyNumber scalar_mul(double scale, const FuzzyNumber& f);
FuzzyNumber shift(const FuzzyNumber& f, double offset);

inline FuzzyNumber operator+(const FuzzyNumber& f, const FuzzyNumber& g) {
  return minkowski_add(f, g);
}
inline FuzzyNumber operator*(double scale, const FuzzyNumber& f) {
  return scalar_mul(scale, f);
}

// True iff every cut midpoint lies within tol of x.
bool is_symmetric_about(const FuzzyNumber& f, double x, double tol);
// True iff f is symmetric about some point, i.e. the cut midpoints span ≤ 2·tol.
bool is_symmetric(const FuzzyNumber& f, double tol);

// sup over levels of max(|f⁻ − g⁻|, |f⁺ − g⁺|). Differing grids are merged.
double hausdorff(const FuzzyNumber& f, const FuzzyNumber& g);

// Power hedge A^i: [A^i]_α = [A]_{α^{1/i}}, evaluated on f's own grid.
FuzzyNumber power_hedge(const FuzzyNumber& f, unsigned exponent);

// B ⊙ C = cB + bC − bc with {b} = [B]₁, {c} = [C]₁. Both cores must be
// singletons, otherwise ErrorKind::domain.
FuzzyNumber cross_product(const FuzzyNumber& b, const FuzzyNumber& c);

}  // namespace sliring
