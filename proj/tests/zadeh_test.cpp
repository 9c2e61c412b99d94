#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sliring/error.hpp"
#include "sliring/zadeh.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace sliring {
namespace {

using testing::Gen;

const LevelGrid kGrid = LevelGrid::uniform(101);

BoxFunction unary(std::function<double(double)> fn) {
  BoxFunction f;
  f.arity = 1;
  f.evaluate = [fn](std::span<const double> v) { return fn(v[0]); };
  return f;
}

BoxFunction sum2() {
  BoxFunction f;
  f.arity = 2;
  f.evaluate = [](std::span<const double> v) { return v[0] + v[1]; };
  return f;
}

TEST(ExtendVertex, Examples) {
  const std::vector<Interval> one{Interval(2, 5)};
  EXPECT_EQ(extend_vertex(unary([](double x) { return x; }), one), Interval(2, 5));
  EXPECT_EQ(extend_vertex(unary([](double) { return 4.5; }), one), Interval(4.5, 4.5));

  // P for ā = 2, x̄ = 1: 2x + y − 2 + z over [0,3]×[0,3]×[0,0].
  const std::vector<Interval> box{Interval(0, 3), Interval(0, 3), Interval(0, 0)};
  const auto want = testing::corner_enumeration(
      [](const std::vector<double>& p) { return 2 * p[0] + 1 * p[1] - 2 + p[2]; },
      {{0, 3}, {0, 3}, {0, 0}});
  EXPECT_EQ(want.lo, -2);
  EXPECT_EQ(want.hi, 7);
  EXPECT_EQ(extend_vertex(linearized_product_sum(1, 2), box), Interval(want.lo, want.hi));
}

TEST(ExtendVertex, ArityMismatch) {
  const std::vector<Interval> two{Interval(0, 1), Interval(0, 1)};
  EXPECT_THROW(extend_vertex(unary([](double x) { return x; }), two), Error);
}

TEST(ExtendVertex, MonotonicityHintAgreesWithEnumeration) {
  Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = gen.uniform(-3, 3), x = gen.uniform(-3, 3);
    BoxFunction plain = linearized_product_sum(x, a);
    BoxFunction hinted = plain;
    auto sign = [](double s) { return s >= 0 ? Monotonicity::increasing : Monotonicity::decreasing; };
    hinted.monotonicity_hint = {sign(a), sign(x), Monotonicity::increasing};
    std::vector<Interval> box;
    for (int i = 0; i < 3; ++i) {
      const double lo = gen.uniform(-5, 5);
      box.emplace_back(lo, lo + gen.uniform(0, 3));
    }
    const Interval p = extend_vertex(plain, box), h = extend_vertex(hinted, box);
    EXPECT_NEAR(p.lo, h.lo, 1e-12);
    EXPECT_NEAR(p.hi, h.hi, 1e-12);
  }
}

TEST(ExtendGrid, Examples) {
  const auto sq = unary([](double x) { return x * x; });
  const std::vector<Interval> cut{Interval(-1, 2)};
  const Interval img = extend_grid(sq, cut, 301);
  EXPECT_NEAR(img.lo, 0.0, 1e-2);
  EXPECT_NEAR(img.hi, 4.0, 1e-2);

  EXPECT_EQ(extend_grid(unary([](double x) { return x; }), std::vector<Interval>{Interval(2, 5)}, 2),
            Interval(2, 5));
  EXPECT_EQ(extend_grid(sum2(), std::vector<Interval>{Interval(0, 1), Interval(0, 1)}, 2),
            Interval(0, 2));
  EXPECT_THROW(extend_grid(sum2(), std::vector<Interval>{Interval(0, 1), Interval(0, 1)}, 1), Error);
}

TEST(ExtendGrid, InnerApproximationConvergesToVertex) {
  Gen gen(22);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = linearized_product_sum(gen.uniform(-2, 2), gen.uniform(-2, 2));
    std::vector<Interval> box;
    for (int i = 0; i < 3; ++i) {
      const double lo = gen.uniform(-5, 5);
      box.emplace_back(lo, lo + gen.uniform(0, 3));
    }
    const Interval exact = extend_vertex(f, box);
    for (std::size_t density : {2u, 5u, 9u}) {
      const Interval approx = extend_grid(f, box, density);
      EXPECT_TRUE(exact.contains(Interval(approx.lo + 1e-12, std::max(approx.lo + 1e-12, approx.hi - 1e-12))));
      // Corners are sampled, so a multiaffine image is hit exactly.
      EXPECT_NEAR(approx.lo, exact.lo, 1e-12);
      EXPECT_NEAR(approx.hi, exact.hi, 1e-12);
    }
  }
}

TEST(ExtendVertex, InclusionMonotone) {
  Gen gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = linearized_product_sum(gen.uniform(-2, 2), gen.uniform(-2, 2));
    std::vector<Interval> outer, inner;
    for (int i = 0; i < 3; ++i) {
      const double lo = gen.uniform(-5, 5), w = gen.uniform(0, 3);
      outer.emplace_back(lo, lo + w);
      const double ilo = lo + gen.uniform(0, w);
      inner.emplace_back(ilo, ilo + gen.uniform(0, lo + w - ilo));
    }
    EXPECT_TRUE(extend_vertex(f, outer).contains(extend_vertex(f, inner)));
  }
}

TEST(ExtendFuzzy, IdentityAndSum) {
  Gen gen(24);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = make_trapezoid(gen.trapezoid(), kGrid);
    const auto b = make_trapezoid(gen.trapezoid(), kGrid);
    const std::vector<FuzzyNumber> one{a};
    EXPECT_EQ(extend_fuzzy(unary([](double x) { return x; }), one), a);
    const std::vector<FuzzyNumber> two{a, b};
    EXPECT_LE(hausdorff(extend_fuzzy(sum2(), two), minkowski_add(a, b)), 1e-12);
  }
}

TEST(ExtendFuzzy, LinearizationMatchesCrossProductPlusShift) {
  Gen gen(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = make_trapezoid(gen.singleton_core_trapezoid(), kGrid);
    const auto a = make_trapezoid(gen.singleton_core_trapezoid(), kGrid);
    const auto b = make_trapezoid(gen.singleton_core_trapezoid(), kGrid);
    const std::vector<FuzzyNumber> args{x, a, b};
    const auto oracle = extend_fuzzy(linearized_product_sum(core_point(x), core_point(a)), args);
    EXPECT_LE(hausdorff(minkowski_add(cross_product(a, x), b), oracle), 1e-12);
  }
}

TEST(ExtendFuzzy, GridModeStaysNested) {
  const auto a = make_trapezoid({-1, 0.2, 0.2, 2}, kGrid);
  const std::vector<FuzzyNumber> args{a};
  const auto sq = extend_fuzzy(unary([](double x) { return x * x; }), args, ExtensionMode::grid, 7);
  for (std::size_t k = 1; k < sq.size(); ++k) {
    EXPECT_LE(sq.lower()[k - 1], sq.lower()[k]);
    EXPECT_GE(sq.upper()[k - 1], sq.upper()[k]);
  }
  // Inner approximation of x² over [−1, 2].
  EXPECT_GE(sq.level(0).lo, 0.0);
  EXPECT_LE(sq.level(0).hi, 4.0);
}

}  // namespace
}  // namespace sliring
