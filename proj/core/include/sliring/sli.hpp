#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sliring/fuzzy_number.hpp"
#include "sliring/level_grid.hpp"

namespace sliring {

// Relative SLI threshold: a midpoint matrix is accepted when its smallest
// singular value exceeds this factor times its max-norm.
inline constexpr double kDefaultSliThreshold = 1e-8;

// Outcome of the grid-level strong-linear-independence test.
//
// A combination B = Σ qᵢAᵢ has cut midpoints Σ qᵢ mᵢ(α), and B is symmetric
// about 0 exactly when that sum vanishes at every level. The set is SLI on
// the grid iff the midpoint columns mᵢ are linearly independent, i.e. the
// smallest singular value of the (levels × n) midpoint matrix is positive.
struct SliCertificate {
  double smallest_singular_value = 0.0;
  double matrix_max_norm = 0.0;
  double relative_threshold = kDefaultSliThreshold;
  double threshold = 0.0;  // relative_threshold · matrix_max_norm
  bool accepted = false;
};

SliCertificate verify_sli(std::span<const FuzzyNumber> elements,
                          double relative_threshold = kDefaultSliThreshold);

class SliBasis;
using BasisPtr = std::shared_ptr<const SliBasis>;

namespace detail {
BasisPtr make_basis(std::vector<FuzzyNumber> elements, double relative_threshold,
                    std::optional<Trapezoid> generator);
}  // namespace detail

// Ordered basis {A₁ = 1, A₂, …, Aₙ} of singleton-core fuzzy numbers on one
// grid, certified SLI. Immutable; shared by every SVector built on it.
class SliBasis {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<FuzzyNumber>& elements() const noexcept { return elements_; }
  const FuzzyNumber& element(std::size_t i) const { return elements_.at(i); }
  // aᵢ with {aᵢ} = [Aᵢ]₁; cores()[0] == 1.
  const std::vector<double>& cores() const noexcept { return cores_; }
  const LevelGrid& grid() const noexcept { return *grid_; }
  const std::shared_ptr<const LevelGrid>& shared_grid() const noexcept { return grid_; }
  const SliCertificate& certificate() const noexcept { return certificate_; }
  // Set when the basis came from build_power_basis.
  const std::optional<Trapezoid>& generator() const noexcept { return generator_; }

  // Entry (k, i) = midpoint of [Aᵢ]_{α_k}.
  double midpoint(std::size_t level, std::size_t i) const noexcept {
    return midpoints_[i * grid_->size() + level];
  }
  // Column-major storage, grid().size() rows by size() columns.
  std::span<const double> midpoint_matrix() const noexcept { return midpoints_; }

  // Same elements on the same grid.
  bool same_as(const SliBasis& other) const;

 private:
  friend BasisPtr detail::make_basis(std::vector<FuzzyNumber>, double,
                                     std::optional<Trapezoid>);
  SliBasis() = default;

  std::shared_ptr<const LevelGrid> grid_;
  std::vector<FuzzyNumber> elements_;
  std::vector<double> cores_;
  std::vector<double> midpoints_;
  SliCertificate certificate_;
  std::optional<Trapezoid> generator_;
};

// {1, A, A², …, A^{n−1}} from a non-symmetric singleton-core trapezoid A.
// Throws ErrorKind::sli_failure for symmetric or crisp generators and when
// the certificate falls below the threshold; ErrorKind::domain for n < 2 or
// a generator whose core is not a single point.
BasisPtr build_power_basis(const Trapezoid& generator, std::size_t n,
                           const LevelGrid& grid = LevelGrid(),
                           double relative_threshold = kDefaultSliThreshold);

// Explicit element list. elements[0] must be crisp 1 and every element must
// have a singleton core; the set must certify.
BasisPtr build_explicit_basis(std::vector<FuzzyNumber> elements,
                              double relative_threshold = kDefaultSliThreshold);

// Element of S(A): ψ(q₁, …, qₙ) = q₁ + q₂A₂ + … + qₙAₙ.
class SVector {
 public:
  // Throws ErrorKind::basis_mismatch if coords.size() != basis->size().
  SVector(BasisPtr basis, std::vector<double> coords);

  // r ↦ (r, 0, …, 0)
  static SVector crisp(BasisPtr basis, double value);
  static SVector zero(BasisPtr basis) { return crisp(std::move(basis), 0.0); }

  const BasisPtr& basis() const noexcept { return basis_; }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }

  // q₁ + Σ_{i≥2} qᵢaᵢ, the single point of the core.
  double core_value() const noexcept;

 private:
  BasisPtr basis_;
  std::vector<double> coords_;
};

// Throws ErrorKind::basis_mismatch unless both are tied to the same basis.
void require_same_basis(const SVector& a, const SVector& b);

// Levelwise q₁[A₁]_α + … + qₙ[Aₙ]_α with the usual interval operations.
FuzzyNumber psi_realize(const SVector& v);

// Least-squares fit of the cut midpoints, then acceptance iff the
// realization of the fitted coordinates is within `tol` (Hausdorff) of f.
std::optional<std::vector<double>> psi_recover(const SliBasis& basis, const FuzzyNumber& f,
                                               double tol = 1e-9);

}  // namespace sliring
