#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sliring/fuzzy_number.hpp"
#include "sliring/interval.hpp"

namespace sliring {

// Direction in which a function moves along one coordinate.
enum class Monotonicity : signed char { decreasing = -1, unknown = 0, increasing = 1 };

// Real function of `arity` real variables, extended to fuzzy arguments
// levelwise. `evaluate` must be deterministic. The optional hint lets the
// vertex oracle pin monotone coordinates instead of enumerating them.
struct BoxFunction {
  std::size_t arity = 0;
  std::function<double(std::span<const double>)> evaluate;
  std::vector<Monotonicity> monotonicity_hint;  // empty, or one entry per coordinate
};

enum class ExtensionMode { vertex, grid };

// Image of the box under a multiaffine f: min/max over the 2^arity corners.
// Exact for functions affine in each coordinate separately.
Interval extend_vertex(const BoxFunction& f, std::span<const Interval> cuts);

// Image estimate from a regular density^arity sample of the box (corners
// included). It is an inner approximation of the true image, so use it for
// containment checks, not for equality assertions.
Interval extend_grid(const BoxFunction& f, std::span<const Interval> cuts, std::size_t density);

// Level-by-level extension [f̂(A₁,…,Aₙ)]_α = f([A₁]_α, …, [Aₙ]_α), including α = 0.
// Arguments are brought onto a common grid first. In grid mode the raw
// per-level estimates are hulled from the top level down so the result
// stays nested.
FuzzyNumber extend_fuzzy(const BoxFunction& f, std::span<const FuzzyNumber> args,
                         ExtensionMode mode = ExtensionMode::vertex,
                         std::size_t grid_density = 64);

// P(x, y, z) = ā·x + x̄·y − ā·x̄ + z, the linearization of xy + z about the
// cores (x̄, ā). Argument order is (X, A, B).
BoxFunction linearized_product_sum(double x_core, double a_core);

}  // namespace sliring
