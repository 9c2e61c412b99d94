#pragma once

#include "sliring/sli.hpp"

namespace sliring {

// (S(A), +ψ, ⊙ψ) is a commutative ring. Every operation here acts on
// coordinates only; call psi_realize for the fuzzy number.
using RingElement = SVector;

// |core| at or below this is treated as zero: no ⊙ψ-inverse exists.
inline constexpr double kZeroCoreTolerance = 1e-9;

RingElement add_psi(const RingElement& b, const RingElement& c);
RingElement sub_psi(const RingElement& b, const RingElement& c);
RingElement scalar_psi(double scale, const RingElement& b);
RingElement neg_psi(const RingElement& b);

// B ⊙ψ C = c·B +ψ b·C −ψ bc, with b, c the core values.
RingElement cross_psi(const RingElement& b, const RingElement& c);

// C⁻¹ψ = (2/c − p₁/c²) − (p₂/c²)A₂ − … − (pₙ/c²)Aₙ.
// Throws ErrorKind::no_inverse when |core(C)| ≤ kZeroCoreTolerance.
RingElement inv_psi(const RingElement& c);

// B ⊙ψ C⁻¹ψ
RingElement div_psi(const RingElement& b, const RingElement& c);

bool is_invertible(const RingElement& c) noexcept;

// max_i |bᵢ − cᵢ|; bases must match.
double coord_distance(const RingElement& b, const RingElement& c);

inline RingElement operator+(const RingElement& b, const RingElement& c) { return add_psi(b, c); }
inline RingElement operator-(const RingElement& b, const RingElement& c) { return sub_psi(b, c); }
inline RingElement operator-(const RingElement& b) { return neg_psi(b); }
inline RingElement operator*(double s, const RingElement& b) { return scalar_psi(s, b); }

}  // namespace sliring
