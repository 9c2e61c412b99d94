#include "sliring/ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sliring/error.hpp"

namespace sliring {

namespace {

template <typename Op>
RingElement zip(const RingElement& b, const RingElement& c, Op op) {
  require_same_basis(b, c);
  std::vector<double> out(b.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(b[i], c[i]);
  return RingElement(b.basis(), std::move(out));
}

// Σ_{i≥2} qᵢaᵢ: the core of the non-constant part.
double fuzzy_core(const RingElement& b) noexcept {
  const auto& cores = b.basis()->cores();
  double s = 0.0;
  for (std::size_t i = 1; i < b.size(); ++i) s += b[i] * cores[i];
  return s;
}

}  // namespace

RingElement add_psi(const RingElement& b, const RingElement& c) {
  return zip(b, c, [](double x, double y) { return x + y; });
}

RingElement sub_psi(const RingElement& b, const RingElement& c) {
  return zip(b, c, [](double x, double y) { return x - y; });
}

RingElement scalar_psi(double scale, const RingElement& b) {
  std::vector<double> out(b.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale * b[i];
  return RingElement(b.basis(), std::move(out));
}

RingElement neg_psi(const RingElement& b) { return scalar_psi(-1.0, b); }

RingElement cross_psi(const RingElement& b, const RingElement& c) {
  require_same_basis(b, c);
  const double b_fuzzy = fuzzy_core(b);
  const double c_fuzzy = fuzzy_core(c);
  const double bc = b[0] + b_fuzzy;
  const double cc = c[0] + c_fuzzy;
  std::vector<double> out(b.size());
  // c·b₁ + b·c₁ − bc collapses to b₁c₁ − β·γ with β, γ the fuzzy-part cores;
  // symmetric in (b, c) and exact when either factor is crisp.
  out[0] = b[0] * c[0] - b_fuzzy * c_fuzzy;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = cc * b[i] + bc * c[i];
  return RingElement(b.basis(), std::move(out));
}

bool is_invertible(const RingElement& c) noexcept {
  return std::abs(c.core_value()) > kZeroCoreTolerance;
}

RingElement inv_psi(const RingElement& c) {
  const double c_fuzzy = fuzzy_core(c);
  const double core = c[0] + c_fuzzy;
  if (!(std::abs(core) > kZeroCoreTolerance)) {
    std::ostringstream msg;
    msg << "element has core " << core << "; no cross-product inverse exists";
    fail(ErrorKind::no_inverse, msg.str());
  }
  const double core_sq = core * core;
  std::vector<double> out(c.size());
  // 2/c − p₁/c² written as 1/c + (c − p₁)/c², which is exactly 1/c for crisp c.
  out[0] = 1.0 / core + c_fuzzy / core_sq;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -c[i] / core_sq;
  return RingElement(c.basis(), std::move(out));
}

RingElement div_psi(const RingElement& b, const RingElement& c) {
  require_same_basis(b, c);
  return cross_psi(b, inv_psi(c));
}

double coord_distance(const RingElement& b, const RingElement& c) {
  require_same_basis(b, c);
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) d = std::max(d, std::abs(b[i] - c[i]));
  return d;
}

}  // namespace sliring
