#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sliring {

inline constexpr std::size_t kDefaultLevelCount = 101;

// Strictly increasing membership levels α₀ = 0 < α₁ < … < α_M = 1, M ≥ 2.
class LevelGrid {
 public:
  // Default: uniform grid with kDefaultLevelCount levels.
  LevelGrid();
  // Throws ErrorKind::domain unless the invariants hold.
  explicit LevelGrid(std::vector<double> levels);

  // α_k = k / (count − 1); endpoints are exactly 0 and 1.
  static LevelGrid uniform(std::size_t count);

  std::size_t size() const noexcept { return levels_.size(); }
  double operator[](std::size_t k) const noexcept { return levels_[k]; }
  std::span<const double> levels() const noexcept { return levels_; }

  // Index k with α_k ≤ α < α_{k+1}; returns size() − 2 for α = 1 so that
  // [k, k+1] is always a valid bracket.
  std::size_t bracket(double alpha) const noexcept;

  // Sorted union of both level sets.
  static LevelGrid merge(const LevelGrid& a, const LevelGrid& b);

  friend bool operator==(const LevelGrid&, const LevelGrid&) = default;

 private:
  std::vector<double> levels_;
};

}  // namespace sliring
