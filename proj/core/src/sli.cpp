#include "sliring/sli.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "sliring/error.hpp"

namespace sliring {

namespace {

using ColMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor>;

std::shared_ptr<const LevelGrid> common_grid(std::span<const FuzzyNumber> elements) {
  auto grid = elements.front().shared_grid();
  for (const auto& e : elements.subspan(1)) {
    if (!(e.shared_grid() == grid || e.grid() == *grid)) {
      grid = std::make_shared<const LevelGrid>(LevelGrid::merge(*grid, e.grid()));
    }
  }
  return grid;
}

std::vector<double> midpoint_columns(std::span<const FuzzyNumber> elements) {
  const std::size_t rows = elements.front().size();
  std::vector<double> m(rows * elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t k = 0; k < rows; ++k) m[i * rows + k] = elements[i].midpoint(k);
  }
  return m;
}

SliCertificate certify(std::span<const double> columns, std::size_t rows, std::size_t cols,
                       double relative_threshold) {
  const Eigen::Map<const ColMatrix> m(columns.data(), static_cast<Eigen::Index>(rows),
                                      static_cast<Eigen::Index>(cols));
  SliCertificate cert;
  cert.relative_threshold = relative_threshold;
  cert.matrix_max_norm = m.cwiseAbs().maxCoeff();
  cert.threshold = relative_threshold * cert.matrix_max_norm;
  // More columns than levels can never be independent.
  if (cols > rows) {
    cert.smallest_singular_value = 0.0;
  } else {
    const Eigen::JacobiSVD<ColMatrix> svd(m);
    cert.smallest_singular_value = svd.singularValues()(svd.singularValues().size() - 1);
  }
  cert.accepted = cert.smallest_singular_value > cert.threshold;
  return cert;
}

void check_threshold(double relative_threshold) {
  if (!(relative_threshold >= 0.0) || !std::isfinite(relative_threshold)) {
    fail(ErrorKind::domain, "SLI threshold must be a finite non-negative number");
  }
}

std::string describe(const SliCertificate& cert) {
  std::ostringstream msg;
  msg << "smallest singular value " << cert.smallest_singular_value << " <= threshold "
      << cert.threshold;
  return msg.str();
}

}  // namespace

SliCertificate verify_sli(std::span<const FuzzyNumber> elements, double relative_threshold) {
  if (elements.empty()) fail(ErrorKind::domain, "SLI test needs at least one fuzzy number");
  check_threshold(relative_threshold);
  const auto grid = common_grid(elements);
  std::vector<FuzzyNumber> aligned;
  aligned.reserve(elements.size());
  for (const auto& e : elements) aligned.push_back(resample(e, grid));
  return certify(midpoint_columns(aligned), grid->size(), aligned.size(), relative_threshold);
}

namespace detail {

BasisPtr make_basis(std::vector<FuzzyNumber> elements, double relative_threshold,
                    std::optional<Trapezoid> generator) {
  if (elements.empty()) fail(ErrorKind::domain, "basis needs at least one element");
  check_threshold(relative_threshold);

  const auto grid = common_grid(elements);
  for (auto& e : elements) e = resample(e, grid);

  const FuzzyNumber& first = elements.front();
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (std::abs(first.lower()[k] - 1.0) > 1e-12 || std::abs(first.upper()[k] - 1.0) > 1e-12) {
      fail(ErrorKind::domain, "the first basis element must be crisp 1");
    }
  }

  std::vector<double> cores(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!has_singleton_core(elements[i])) {
      std::ostringstream msg;
      msg << "basis element " << i << " has non-singleton core " << core(elements[i]);
      fail(ErrorKind::domain, msg.str());
    }
    cores[i] = core_point(elements[i]);
  }
  cores[0] = 1.0;

  auto midpoints = midpoint_columns(elements);
  const SliCertificate cert =
      certify(midpoints, grid->size(), elements.size(), relative_threshold);
  if (!cert.accepted) {
    fail(ErrorKind::sli_failure, "basis is not strongly linearly independent: " + describe(cert));
  }

  auto basis = std::shared_ptr<SliBasis>(new SliBasis());
  basis->grid_ = grid;
  basis->elements_ = std::move(elements);
  basis->cores_ = std::move(cores);
  basis->midpoints_ = std::move(midpoints);
  basis->certificate_ = cert;
  basis->generator_ = generator;
  return basis;
}

}  // namespace detail

bool SliBasis::same_as(const SliBasis& other) const {
  if (this == &other) return true;
  if (size() != other.size() || !(grid() == other.grid())) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!(elements_[i] == other.elements_[i])) return false;
  }
  return true;
}

BasisPtr build_power_basis(const Trapezoid& generator, std::size_t n, const LevelGrid& grid,
                           double relative_threshold) {
  if (n < 2) fail(ErrorKind::domain, "power basis needs n >= 2, got " + std::to_string(n));
  const Trapezoid gen(generator.a, generator.b, generator.c, generator.d);
  if (!gen.has_singleton_core()) {
    fail(ErrorKind::domain, "power-basis generator must have a singleton core (b == c)");
  }
  const auto shared = std::make_shared<const LevelGrid>(grid);
  const FuzzyNumber a = make_trapezoid(gen, shared);
  const double scale = std::max({1.0, std::abs(gen.a), std::abs(gen.d)});
  if (is_symmetric_about(a, gen.b, kSingletonTolerance * scale)) {
    std::ostringstream msg;
    msg << "generator (" << gen.a << ", " << gen.b << ", " << gen.c << ", " << gen.d
        << ") is symmetric about " << gen.b << "; its power hedges cannot form an SLI set";
    fail(ErrorKind::sli_failure, msg.str());
  }

  std::vector<FuzzyNumber> elements;
  elements.reserve(n);
  elements.push_back(FuzzyNumber::crisp(1.0, shared));
  for (std::size_t i = 1; i < n; ++i) {
    elements.push_back(power_hedge(a, static_cast<unsigned>(i)));
  }
  return detail::make_basis(std::move(elements), relative_threshold, gen);
}

BasisPtr build_explicit_basis(std::vector<FuzzyNumber> elements, double relative_threshold) {
  return detail::make_basis(std::move(elements), relative_threshold, std::nullopt);
}

SVector::SVector(BasisPtr basis, std::vector<double> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  if (!basis_) fail(ErrorKind::domain, "S(A) element requires a basis");
  if (coords_.size() != basis_->size()) {
    fail(ErrorKind::basis_mismatch, "coordinate vector has " + std::to_string(coords_.size()) +
                                        " entries but the basis has " +
                                        std::to_string(basis_->size()) + " elements");
  }
}

SVector SVector::crisp(BasisPtr basis, double value) {
  std::vector<double> coords(basis ? basis->size() : 0, 0.0);
  if (!coords.empty()) coords[0] = value;
  return SVector(std::move(basis), std::move(coords));
}

double SVector::core_value() const noexcept {
  const auto& cores = basis_->cores();
  double fuzzy = 0.0;
  for (std::size_t i = 1; i < coords_.size(); ++i) fuzzy += coords_[i] * cores[i];
  return coords_[0] + fuzzy;
}

void require_same_basis(const SVector& a, const SVector& b) {
  if (a.basis() == b.basis()) return;
  if (!a.basis()->same_as(*b.basis())) {
    fail(ErrorKind::basis_mismatch, "operands belong to different bases");
  }
}

FuzzyNumber psi_realize(const SVector& v) {
  const SliBasis& basis = *v.basis();
  const std::size_t levels = basis.grid().size();
  std::vector<double> lower(levels, 0.0), upper(levels, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const FuzzyNumber& e = basis.element(i);
    for (std::size_t k = 0; k < levels; ++k) {
      const Interval term = v[i] * e.level(k);
      if (i == 0) {
        lower[k] = term.lo;
        upper[k] = term.hi;
      } else {
        lower[k] += term.lo;
        upper[k] += term.hi;
      }
    }
  }
  return FuzzyNumber(basis.shared_grid(), std::move(lower), std::move(upper));
}

std::optional<std::vector<double>> psi_recover(const SliBasis& basis, const FuzzyNumber& f,
                                               double tol) {
  const FuzzyNumber on_grid = resample(f, basis.shared_grid());
  const auto rows = static_cast<Eigen::Index>(basis.grid().size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  const Eigen::Map<const ColMatrix> m(basis.midpoint_matrix().data(), rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index k = 0; k < rows; ++k) rhs(k) = on_grid.midpoint(static_cast<std::size_t>(k));

  const Eigen::ColPivHouseholderQR<ColMatrix> qr(m);
  if (qr.rank() < cols) {
    fail(ErrorKind::internal, "midpoint matrix of a certified basis is rank deficient");
  }
  const Eigen::VectorXd q = qr.solve(rhs);
  std::vector<double> coords(q.data(), q.data() + q.size());

  const SVector candidate(std::shared_ptr<const SliBasis>(&basis, [](const SliBasis*) {}), coords);
  if (hausdorff(psi_realize(candidate), on_grid) > tol) return std::nullopt;
  return coords;
}

}  // namespace sliring
