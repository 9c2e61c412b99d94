#pragma once

#include <iosfwd>

namespace sliring {

// Closed real interval [lo, hi]; the value of a single α-cut.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  // Throws ErrorKind::domain when lo > hi or either bound is NaN.
  Interval(double lo, double hi);
  static Interval point(double x) noexcept;

  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b) noexcept;
Interval operator-(const Interval& a, const Interval& b) noexcept;
Interval operator+(const Interval& a, double shift) noexcept;
// Sign-aware scaling: [λa⁻, λa⁺] for λ ≥ 0, [λa⁺, λa⁻] otherwise.
Interval operator*(double scale, const Interval& a) noexcept;

// Convex hull of two intervals.
Interval hull(const Interval& a, const Interval& b) noexcept;

// max(|a.lo − b.lo|, |a.hi − b.hi|)
double endpoint_distance(const Interval& a, const Interval& b) noexcept;

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace sliring
