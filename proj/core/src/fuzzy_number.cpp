#include "sliring/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "sliring/error.hpp"

namespace sliring {

namespace {

constexpr double kNestingSlack = 1e-12;

Interval snapped(double lo, double hi) noexcept {
  Interval iv;
  if (lo > hi) lo = hi = 0.5 * (lo + hi);
  iv.lo = lo;
  iv.hi = hi;
  return iv;
}

std::shared_ptr<const LevelGrid> share(const LevelGrid& grid) {
  return std::make_shared<const LevelGrid>(grid);
}

bool same_grid(const FuzzyNumber& f, const FuzzyNumber& g) {
  return f.shared_grid() == g.shared_grid() || f.grid() == g.grid();
}

// Brings g onto f's grid, or both onto the merged grid.
std::pair<FuzzyNumber, FuzzyNumber> align(const FuzzyNumber& f, const FuzzyNumber& g) {
  if (same_grid(f, g)) return {f, g};
  auto merged = share(LevelGrid::merge(f.grid(), g.grid()));
  return {resample(f, merged), resample(g, merged)};
}

}  // namespace

Trapezoid::Trapezoid(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
  const bool finite = std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
  if (!finite || !(a <= b && b <= c && c <= d)) {
    std::ostringstream msg;
    msg << "trapezoid requires a <= b <= c <= d, got (" << a << ", " << b << ", " << c << ", "
        << d << ")";
    fail(ErrorKind::domain, msg.str());
  }
}

Interval Trapezoid::cut(double alpha) const noexcept {
  if (alpha >= 1.0) return snapped(b, c);
  if (alpha <= 0.0) return snapped(a, d);
  return snapped(a + alpha * (b - a), d - alpha * (d - c));
}

FuzzyNumber::FuzzyNumber(LevelGrid grid, std::vector<double> lower, std::vector<double> upper)
    : FuzzyNumber(share(grid), std::move(lower), std::move(upper)) {}

FuzzyNumber::FuzzyNumber(std::shared_ptr<const LevelGrid> grid, std::vector<double> lower,
                         std::vector<double> upper)
    : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!grid_) fail(ErrorKind::domain, "fuzzy number requires a level grid");
  const std::size_t n = grid_->size();
  if (lower_.size() != n || upper_.size() != n) {
    fail(ErrorKind::domain, "fuzzy number endpoint sequences must match the grid size (" +
                                std::to_string(n) + ")");
  }
  double scale = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k])) {
      fail(ErrorKind::domain, "fuzzy number endpoints must be finite");
    }
    scale = std::max({scale, std::abs(lower_[k]), std::abs(upper_[k])});
  }
  const double slack = kNestingSlack * scale;

  for (std::size_t k = 0; k < n; ++k) {
    if (lower_[k] > upper_[k]) {
      if (lower_[k] - upper_[k] > slack) {
        fail(ErrorKind::domain, "empty cut at level index " + std::to_string(k));
      }
      lower_[k] = upper_[k] = 0.5 * (lower_[k] + upper_[k]);
    }
    if (k == 0) continue;
    if (lower_[k] < lower_[k - 1]) {
      if (lower_[k - 1] - lower_[k] > slack) {
        fail(ErrorKind::domain, "cuts are not nested: lower endpoint decreases at index " +
                                    std::to_string(k));
      }
      lower_[k] = lower_[k - 1];
    }
    if (upper_[k] > upper_[k - 1]) {
      if (upper_[k] - upper_[k - 1] > slack) {
        fail(ErrorKind::domain, "cuts are not nested: upper endpoint increases at index " +
                                    std::to_string(k));
      }
      upper_[k] = upper_[k - 1];
    }
    if (lower_[k] > upper_[k]) lower_[k] = upper_[k] = 0.5 * (lower_[k] + upper_[k]);
  }
}

FuzzyNumber FuzzyNumber::crisp(double x, const LevelGrid& grid) {
  return crisp(x, share(grid));
}

FuzzyNumber FuzzyNumber::crisp(double x, std::shared_ptr<const LevelGrid> grid) {
  const std::size_t n = grid->size();
  return FuzzyNumber(std::move(grid), std::vector<double>(n, x), std::vector<double>(n, x));
}

Interval FuzzyNumber::level(std::size_t k) const noexcept {
  Interval iv;
  iv.lo = lower_[k];
  iv.hi = upper_[k];
  return iv;
}

bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) {
  return same_grid(a, b) && a.lower_ == b.lower_ && a.upper_ == b.upper_;
}

FuzzyNumber make_trapezoid(const Trapezoid& t, const LevelGrid& grid) {
  return make_trapezoid(t, share(grid));
}

FuzzyNumber make_trapezoid(const Trapezoid& t, std::shared_ptr<const LevelGrid> grid) {
  // Re-run the ordering check for aggregates built without the constructor.
  const Trapezoid checked(t.a, t.b, t.c, t.d);
  const std::size_t n = grid->size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Interval cut = checked.cut((*grid)[k]);
    lower[k] = cut.lo;
    upper[k] = cut.hi;
  }
  return FuzzyNumber(std::move(grid), std::move(lower), std::move(upper));
}

Interval alpha_cut(const FuzzyNumber& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in [0, 1], got " << alpha;
    fail(ErrorKind::domain, msg.str());
  }
  const LevelGrid& grid = f.grid();
  const std::size_t k = grid.bracket(alpha);
  if (alpha == grid[k]) return f.level(k);
  if (alpha == grid[k + 1]) return f.level(k + 1);
  const double t = (alpha - grid[k]) / (grid[k + 1] - grid[k]);
  const auto lo = f.lower(), hi = f.upper();
  return snapped(lo[k] + t * (lo[k + 1] - lo[k]), hi[k] + t * (hi[k + 1] - hi[k]));
}

Interval core(const FuzzyNumber& f) noexcept { return f.level(f.size() - 1); }

bool has_singleton_core(const FuzzyNumber& f, double tol) noexcept {
  return core(f).width() <= tol;
}

double core_point(const FuzzyNumber& f, double tol) {
  const Interval c = core(f);
  if (c.width() > tol) {
    std::ostringstream msg;
    msg << "core " << c << " is not a singleton (width " << c.width() << " > " << tol << ")";
    fail(ErrorKind::domain, msg.str());
  }
  return c.lo == c.hi ? c.lo : c.midpoint();
}

double diam(const FuzzyNumber& f) noexcept { return f.level(0).width(); }

FuzzyNumber resample(const FuzzyNumber& f, const std::shared_ptr<const LevelGrid>& grid) {
  if (f.shared_grid() == grid || f.grid() == *grid) {
    return FuzzyNumber(grid, {f.lower().begin(), f.lower().end()},
                       {f.upper().begin(), f.upper().end()});
  }
  const std::size_t n = grid->size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Interval cut = alpha_cut(f, (*grid)[k]);
    lower[k] = cut.lo;
    upper[k] = cut.hi;
  }
  return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

FuzzyNumber minkowski_add(const FuzzyNumber& f, const FuzzyNumber& g) {
  const auto [a, b] = align(f, g);
  const std::size_t n = a.size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t k = 0; k < n; ++k) {
    lower[k] = a.lower()[k] + b.lower()[k];
    upper[k] = a.upper()[k] + b.upper()[k];
  }
  return FuzzyNumber(a.shared_grid(), std::move(lower), std::move(upper));
}

FuzzyNumber scalar_mul(double scale, const FuzzyNumber& f) {
  const std::size_t n = f.size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Interval cut = scale * f.level(k);
    lower[k] = cut.lo;
    upper[k] = cut.hi;
  }
  return FuzzyNumber(f.shared_grid(), std::move(lower), std::move(upper));
}

FuzzyNumber shift(const FuzzyNumber& f, double offset) {
  const std::size_t n = f.size();
  std::vector<double> lower(n), upper(n);
  for (std::size_t k = 0; k < n; ++k) {
    lower[k] = f.lower()[k] + offset;
    upper[k] = f.upper()[k] + offset;
  }
  return FuzzyNumber(f.shared_grid(), std::move(lower), std::move(upper));
}

bool is_symmetric_about(const FuzzyNumber& f, double x, double tol) {
  if (!(tol >= 0.0)) fail(ErrorKind::domain, "symmetry tolerance must be non-negative");
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (std::abs(f.midpoint(k) - x) > tol) return false;
  }
  return true;
}

bool is_symmetric(const FuzzyNumber& f, double tol) {
  if (!(tol >= 0.0)) fail(ErrorKind::domain, "symmetry tolerance must be non-negative");
  double lo = f.midpoint(0), hi = lo;
  for (std::size_t k = 1; k < f.size(); ++k) {
    lo = std::min(lo, f.midpoint(k));
    hi = std::max(hi, f.midpoint(k));
  }
  return hi - lo <= 2.0 * tol;
}

double hausdorff(const FuzzyNumber& f, const FuzzyNumber& g) {
  const auto [a, b] = align(f, g);
  double dist = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    dist = std::max(dist, endpoint_distance(a.level(k), b.level(k)));
  }
  return dist;
}

FuzzyNumber power_hedge(const FuzzyNumber& f, unsigned exponent) {
  if (exponent == 0) fail(ErrorKind::domain, "power hedge exponent must be >= 1");
  if (exponent == 1) return f;
  const LevelGrid& grid = f.grid();
  const double root = 1.0 / static_cast<double>(exponent);
  std::vector<double> lower(grid.size()), upper(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Interval cut = alpha_cut(f, std::pow(grid[k], root));
    lower[k] = cut.lo;
    upper[k] = cut.hi;
  }
  return FuzzyNumber(f.shared_grid(), std::move(lower), std::move(upper));
}

FuzzyNumber cross_product(const FuzzyNumber& b, const FuzzyNumber& c) {
  const double b_core = core_point(b);
  const double c_core = core_point(c);
  // A crisp factor reduces to a scalar multiple; skip the add-then-subtract rounding.
  if (diam(c) == 0.0) return scalar_mul(c_core, b);
  if (diam(b) == 0.0) return scalar_mul(b_core, c);
  return shift(minkowski_add(scalar_mul(c_core, b), scalar_mul(b_core, c)), -(b_core * c_core));
}

}  // namespace sliring
