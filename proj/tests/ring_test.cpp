#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sliring/error.hpp"
#include "sliring/ring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace sliring {
namespace {

using testing::Gen;

std::vector<double> coords_of(const RingElement& v) { return {v.coords().begin(), v.coords().end()}; }

class RingTest : public ::testing::Test {
 protected:
  BasisPtr two = build_power_basis({0, 1, 1, 3}, 2);
  BasisPtr four = build_power_basis({0, 1, 1, 3}, 4);

  RingElement e2(double p, double q) const { return SVector(two, {p, q}); }
};

TEST_F(RingTest, Examples) {
  EXPECT_EQ(coords_of(e2(2, 3) + e2(1, 1)), (std::vector<double>{3, 4}));
  EXPECT_EQ(coords_of(e2(2, 3) - e2(1, 1)), (std::vector<double>{1, 2}));
  EXPECT_EQ(coords_of(2.0 * e2(2, 3)), (std::vector<double>{4, 6}));
  EXPECT_EQ(coords_of(-e2(2, 3)), (std::vector<double>{-2, -3}));

  // Cores 5 and 2: 2·(2,3) + 5·(1,1) − 10·e₁ = (−1, 11).
  const RingElement prod = cross_psi(e2(2, 3), e2(1, 1));
  EXPECT_EQ(coords_of(prod), (std::vector<double>{-1, 11}));
  EXPECT_EQ(prod.core_value(), 10.0);

  const RingElement inv = inv_psi(e2(1, 1));
  EXPECT_EQ(coords_of(inv), (std::vector<double>{0.75, -0.25}));
  EXPECT_EQ(inv.core_value(), 0.5);
}

TEST_F(RingTest, CrispCases) {
  EXPECT_EQ(coords_of(cross_psi(e2(3, 0), e2(4, 0))), (std::vector<double>{12, 0}));
  EXPECT_EQ(coords_of(cross_psi(e2(2, 3), e2(1, 0))), (std::vector<double>{2, 3}));
  EXPECT_EQ(coords_of(cross_psi(e2(2, 3), e2(0, 0))), (std::vector<double>{0, 0}));
  EXPECT_EQ(coords_of(inv_psi(e2(4, 0))), (std::vector<double>{0.25, 0}));
  EXPECT_EQ(coords_of(div_psi(e2(6, 0), e2(3, 0))), (std::vector<double>{2, 0}));
}

TEST_F(RingTest, InverseRequiresNonZeroCore) {
  EXPECT_FALSE(is_invertible(e2(-1, 1)));
  EXPECT_TRUE(is_invertible(e2(1, 1)));
  try {
    inv_psi(e2(-1, 1));
    FAIL() << "expected no_inverse";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_inverse);
  }
  EXPECT_THROW(div_psi(e2(1, 1), e2(0, 0)), Error);
}

TEST_F(RingTest, BasisMismatch) {
  const RingElement a = SVector::zero(two), b = SVector::zero(four);
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(cross_psi(a, b), Error);
  EXPECT_THROW(coord_distance(a, b), Error);
}

TEST_F(RingTest, DivisionExample) {
  // (2,3) / (1,1) = (2,3) ⊙ (0.75,−0.25); cores 5 and 0.5.
  const RingElement q = div_psi(e2(2, 3), e2(1, 1));
  EXPECT_NEAR(q.core_value(), 2.5, 1e-12);
  EXPECT_LE(coord_distance(cross_psi(q, e2(1, 1)), e2(2, 3)), 1e-12);
}

TEST_F(RingTest, AxiomSuite) {
  Gen gen(41);
  const RingElement zero = SVector::zero(four), one = SVector::crisp(four, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const RingElement x = gen.element(four), y = gen.element(four), z = gen.element(four);
    EXPECT_LE(coord_distance((x + y) + z, x + (y + z)), 1e-9);
    EXPECT_LE(coord_distance(x + y, y + x), 1e-9);
    EXPECT_LE(coord_distance(cross_psi(cross_psi(x, y), z), cross_psi(x, cross_psi(y, z))), 1e-9);
    EXPECT_EQ(coords_of(cross_psi(x, y)), coords_of(cross_psi(y, x)));
    EXPECT_LE(coord_distance(cross_psi(x, y + z), cross_psi(x, y) + cross_psi(x, z)), 1e-9);
    EXPECT_EQ(coords_of(x + zero), coords_of(x));
    EXPECT_EQ(coords_of(cross_psi(x, one)), coords_of(x));
    EXPECT_EQ(coords_of(x + (-x)), coords_of(zero));
    EXPECT_NEAR(cross_psi(x, y).core_value(), x.core_value() * y.core_value(),
                1e-9 * (1 + std::abs(x.core_value() * y.core_value())));
  }
}

TEST_F(RingTest, AgreesWithTextbookFormulas) {
  Gen gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    const RingElement x = gen.element(four), y = gen.invertible_element(four);
    const auto want = testing::cross_coords(coords_of(x), coords_of(y), four->cores());
    EXPECT_LE(testing::max_abs_diff(coords_of(cross_psi(x, y)), want),
              1e-12 * (1 + std::abs(x.core_value() * y.core_value())));
    const auto inv = testing::inverse_coords(coords_of(y), four->cores());
    const double scale = 1 + std::abs(1 / y.core_value()) + testing::max_abs_diff(inv, std::vector<double>(4, 0));
    EXPECT_LE(testing::max_abs_diff(coords_of(inv_psi(y)), inv), 1e-12 * scale);
  }
}

TEST_F(RingTest, InverseLaw) {
  Gen gen(43);
  const RingElement one = SVector::crisp(four, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const RingElement c = gen.invertible_element(four);
    EXPECT_LE(coord_distance(cross_psi(c, inv_psi(c)), one), 1e-9);
  }
  for (double c : {3.0, -7.0, 0.1, 1e-3, 123.456}) {
    EXPECT_EQ(coords_of(inv_psi(SVector::crisp(four, c))), (std::vector<double>{1 / c, 0, 0, 0}));
  }
}

TEST_F(RingTest, RealizationMatchesCrossProductWhenCoordsNonNegative) {
  // With nonnegative coordinates and positive cores the realization is a
  // nonnegative combination, so ψ of the sum equals the Minkowski sum and the
  // fuzzy cross product agrees with the coordinate one.
  Gen gen(44);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> p(2), q(2);
    for (int i = 0; i < 2; ++i) {
      p[i] = gen.uniform(0, 5);
      q[i] = gen.uniform(0, 5);
    }
    const RingElement b(two, p), c(two, q);
    const FuzzyNumber fb = psi_realize(b), fc = psi_realize(c);
    EXPECT_LE(hausdorff(psi_realize(b + c), fb + fc), 1e-12);
    EXPECT_LE(hausdorff(psi_realize(cross_psi(b, c)), cross_product(fb, fc)), 1e-9);
  }
}

}  // namespace
}  // namespace sliring
