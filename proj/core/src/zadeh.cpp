#include "sliring/zadeh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "sliring/error.hpp"

namespace sliring {

namespace {

void check_arity(const BoxFunction& f, std::size_t n) {
  if (!f.evaluate) fail(ErrorKind::domain, "box function has no evaluator");
  if (f.arity != n) {
    fail(ErrorKind::domain, "arity mismatch: function takes " + std::to_string(f.arity) +
                                " arguments, got " + std::to_string(n));
  }
  if (!f.monotonicity_hint.empty() && f.monotonicity_hint.size() != n) {
    fail(ErrorKind::domain, "monotonicity hint must have one entry per coordinate");
  }
}

Interval make_image(double lo, double hi) {
  Interval iv;
  iv.lo = lo;
  iv.hi = hi;
  return iv;
}

// Visits every point of the product of per-coordinate candidate lists.
template <typename Visit>
void for_each_point(const std::vector<std::vector<double>>& axes, Visit&& visit) {
  const std::size_t n = axes.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<double> point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = axes[i].front();
  while (true) {
    visit(std::span<const double>(point));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] < axes[i].size()) {
        point[i] = axes[i][idx[i]];
        break;
      }
      idx[i] = 0;
      point[i] = axes[i].front();
    }
    if (i == n) return;
  }
}

double extreme_over(const BoxFunction& f, const std::vector<std::vector<double>>& axes,
                    bool want_max) {
  double best = want_max ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  for_each_point(axes, [&](std::span<const double> p) {
    const double v = f.evaluate(p);
    best = want_max ? std::max(best, v) : std::min(best, v);
  });
  return best;
}

}  // namespace

Interval extend_vertex(const BoxFunction& f, std::span<const Interval> cuts) {
  check_arity(f, cuts.size());
  if (cuts.empty()) {
    const double v = f.evaluate({});
    return make_image(v, v);
  }
  const bool hinted = !f.monotonicity_hint.empty();
  // Corners for the minimum and for the maximum; a known monotone
  // coordinate contributes one endpoint instead of two.
  std::vector<std::vector<double>> min_axes(cuts.size()), max_axes(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Monotonicity m = hinted ? f.monotonicity_hint[i] : Monotonicity::unknown;
    const Interval& c = cuts[i];
    switch (m) {
      case Monotonicity::increasing:
        min_axes[i] = {c.lo};
        max_axes[i] = {c.hi};
        break;
      case Monotonicity::decreasing:
        min_axes[i] = {c.hi};
        max_axes[i] = {c.lo};
        break;
      case Monotonicity::unknown:
        if (c.lo == c.hi) {
          min_axes[i] = max_axes[i] = {c.lo};
        } else {
          min_axes[i] = max_axes[i] = {c.lo, c.hi};
        }
        break;
    }
  }
  return make_image(extreme_over(f, min_axes, false), extreme_over(f, max_axes, true));
}

Interval extend_grid(const BoxFunction& f, std::span<const Interval> cuts, std::size_t density) {
  check_arity(f, cuts.size());
  if (density < 2) fail(ErrorKind::domain, "grid density must be >= 2");
  if (cuts.empty()) {
    const double v = f.evaluate({});
    return make_image(v, v);
  }
  std::vector<std::vector<double>> axes(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Interval& c = cuts[i];
    if (c.lo == c.hi) {
      axes[i] = {c.lo};
      continue;
    }
    axes[i].resize(density);
    const double step = c.width() / static_cast<double>(density - 1);
    for (std::size_t j = 0; j + 1 < density; ++j) axes[i][j] = c.lo + static_cast<double>(j) * step;
    axes[i][density - 1] = c.hi;
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for_each_point(axes, [&](std::span<const double> p) {
    const double v = f.evaluate(p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  });
  return make_image(lo, hi);
}

FuzzyNumber extend_fuzzy(const BoxFunction& f, std::span<const FuzzyNumber> args,
                         ExtensionMode mode, std::size_t grid_density) {
  check_arity(f, args.size());
  if (args.empty()) fail(ErrorKind::domain, "extend_fuzzy needs at least one argument");

  auto grid = args.front().shared_grid();
  for (const auto& a : args.subspan(1)) {
    if (!(a.shared_grid() == grid || a.grid() == *grid)) {
      grid = std::make_shared<const LevelGrid>(LevelGrid::merge(*grid, a.grid()));
    }
  }
  std::vector<FuzzyNumber> aligned;
  aligned.reserve(args.size());
  for (const auto& a : args) aligned.push_back(resample(a, grid));

  const std::size_t levels = grid->size();
  std::vector<double> lower(levels), upper(levels);
  std::vector<Interval> cuts(args.size());
  for (std::size_t k = 0; k < levels; ++k) {
    for (std::size_t i = 0; i < aligned.size(); ++i) cuts[i] = aligned[i].level(k);
    const Interval image = mode == ExtensionMode::vertex ? extend_vertex(f, cuts)
                                                         : extend_grid(f, cuts, grid_density);
    lower[k] = image.lo;
    upper[k] = image.hi;
  }
  if (mode == ExtensionMode::grid) {
    for (std::size_t k = levels - 1; k-- > 0;) {
      lower[k] = std::min(lower[k], lower[k + 1]);
      upper[k] = std::max(upper[k], upper[k + 1]);
    }
  }
  return FuzzyNumber(grid, std::move(lower), std::move(upper));
}

BoxFunction linearized_product_sum(double x_core, double a_core) {
  BoxFunction f;
  f.arity = 3;
  f.evaluate = [x_core, a_core](std::span<const double> v) {
    return a_core * v[0] + x_core * v[1] - a_core * x_core + v[2];
  };
  return f;
}

}  // namespace sliring
