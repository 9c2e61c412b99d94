#include "sliring/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "sliring/error.hpp"

namespace sliring {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    std::ostringstream msg;
    msg << "invalid interval [" << lo << ", " << hi << "]";
    fail(ErrorKind::domain, msg.str());
  }
}

Interval Interval::point(double x) noexcept {
  Interval iv;
  iv.lo = x;
  iv.hi = x;
  return iv;
}

namespace {
Interval raw(double lo, double hi) noexcept {
  Interval iv;
  iv.lo = lo;
  iv.hi = hi;
  return iv;
}
}  // namespace

Interval operator+(const Interval& a, const Interval& b) noexcept {
  return raw(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) noexcept {
  return raw(a.lo - b.hi, a.hi - b.lo);
}

Interval operator+(const Interval& a, double shift) noexcept {
  return raw(a.lo + shift, a.hi + shift);
}

Interval operator*(double scale, const Interval& a) noexcept {
  if (scale >= 0.0) return raw(scale * a.lo, scale * a.hi);
  return raw(scale * a.hi, scale * a.lo);
}

Interval hull(const Interval& a, const Interval& b) noexcept {
  return raw(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

double endpoint_distance(const Interval& a, const Interval& b) noexcept {
  return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

}  // namespace sliring
