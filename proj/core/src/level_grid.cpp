#include "sliring/level_grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sliring/error.hpp"

namespace sliring {

LevelGrid::LevelGrid() : LevelGrid(uniform(kDefaultLevelCount)) {}

LevelGrid::LevelGrid(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 3) {
    fail(ErrorKind::domain, "level grid needs at least 3 levels (M >= 2), got " +
                                std::to_string(levels_.size()));
  }
  if (levels_.front() != 0.0 || levels_.back() != 1.0) {
    fail(ErrorKind::domain, "level grid must start at exactly 0 and end at exactly 1");
  }
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    if (!(levels_[k - 1] < levels_[k])) {
      fail(ErrorKind::domain, "level grid must be strictly increasing (violated at index " +
                                  std::to_string(k) + ")");
    }
  }
}

LevelGrid LevelGrid::uniform(std::size_t count) {
  if (count < 3) {
    fail(ErrorKind::domain,
         "level count must be at least 3, got " + std::to_string(count));
  }
  std::vector<double> levels(count);
  const auto m = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) levels[k] = static_cast<double>(k) / m;
  return LevelGrid(std::move(levels));
}

std::size_t LevelGrid::bracket(double alpha) const noexcept {
  auto it = std::upper_bound(levels_.begin(), levels_.end(), alpha);
  auto k = static_cast<std::size_t>(std::distance(levels_.begin(), it));
  if (k == 0) return 0;
  return std::min(k - 1, levels_.size() - 2);
}

LevelGrid LevelGrid::merge(const LevelGrid& a, const LevelGrid& b) {
  if (a == b) return a;
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.levels_.begin(), a.levels_.end(), b.levels_.begin(),
                 b.levels_.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return LevelGrid(std::move(out));
}

}  // namespace sliring
