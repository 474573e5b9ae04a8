#include <gtest/gtest.h>

#include "gerbeflow/errors.hpp"
#include "gerbeflow/permutation.hpp"
#include "gerbeflow/poly.hpp"
#include "gerbeflow/sampling.hpp"

using namespace gerbeflow;

namespace {

Poly var(int i, int n = 2, ArtinRing r = ArtinRing{}) { return Poly::variable(i, n, r); }
Poly cst(const Rational& c, int n = 2, ArtinRing r = ArtinRing{}) { return Poly::constant(c, n, r); }

}  // namespace

TEST(Scalar, TruncatesAtOrder) {
  Scalar h = Scalar::monomial(1, 1, 2);
  Scalar one(1, 2);
  EXPECT_EQ((one + h) * (one - h), one);
  EXPECT_TRUE((h * h).is_zero());
  EXPECT_EQ(Scalar::monomial(5, 2, 2), Scalar(2));
}

TEST(Scalar, RingMismatchIsStructural) {
  EXPECT_THROW(Scalar(1, 2) + Scalar(1, 3), StructuralError);
}

TEST(Scalar, RationalText) {
  EXPECT_EQ(rational_to_string(Rational(4, 6)), "2/3");
  EXPECT_EQ(rational_to_string(Rational(-5)), "-5/1");
  EXPECT_EQ(rational_from_string("-10/4"), Rational(-5, 2));
  EXPECT_EQ(rational_from_string("7"), Rational(7));
  EXPECT_THROW(rational_from_string("1/0"), ParseError);
  EXPECT_THROW(rational_from_string("x"), ParseError);
}

TEST(PolyMul, DifferenceOfSquares) {
  Poly x = var(0), y = var(1);
  EXPECT_EQ(poly_mul(x + y, x - y), x * x - y * y);
}

TEST(PolyMul, ArtinTruncation) {
  ArtinRing r(2);
  Poly one = cst(1, 1, r);
  Poly h = Poly::h_power(1, 1, r);
  EXPECT_EQ(poly_mul(one + h, one - h), one);
}

TEST(PolyMul, RationalCancellation) {
  Poly x = var(0, 1);
  EXPECT_EQ(poly_mul(Rational(2, 3) * x, Rational(3, 2) * x), x * x);
}

TEST(PolyMul, MismatchIsStructural) {
  EXPECT_THROW(poly_mul(var(0, 1), var(0, 2)), StructuralError);
  EXPECT_THROW(poly_mul(cst(1, 1, ArtinRing(2)), cst(1, 1, ArtinRing(3))), StructuralError);
}

TEST(PolyPartial, Examples) {
  Poly x = var(0), y = var(1);
  EXPECT_EQ(poly_partial(x * x * y, 0), Rational(2) * x * y);
  EXPECT_TRUE(poly_partial(x * x, 1).is_zero());
  ArtinRing r(3);
  Poly hx = Poly::h_power(1, 1, r) * Poly::variable(0, 1, r);
  EXPECT_EQ(poly_partial(hx, 0), Poly::h_power(1, 1, r));
  EXPECT_THROW(poly_partial(x, 2), DomainError);
  EXPECT_THROW(poly_partial(x, -1), DomainError);
}

TEST(PolyProperties, RingAxiomsAndLeibniz) {
  Rng rng(11);
  ArtinRing ring(3);
  for (int t = 0; t < 100; ++t) {
    Poly p = random_poly(rng, 3, 3, ring), q = random_poly(rng, 3, 3, ring), r = random_poly(rng, 3, 3, ring);
    ASSERT_EQ((p + q) * r, p * r + q * r);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p * q) * r, p * (q * r));
    for (int i = 0; i < 3; ++i) {
      ASSERT_EQ(poly_partial(p * q, i), poly_partial(p, i) * q + p * poly_partial(q, i));
      for (int j = 0; j < 3; ++j) ASSERT_EQ(poly_partial(poly_partial(p, i), j), poly_partial(poly_partial(p, j), i));
    }
  }
}

TEST(PolyProperties, DegreeOfProduct) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Poly p = random_poly(rng, 2, 3, ArtinRing{}), q = random_poly(rng, 2, 3, ArtinRing{});
    if (p.is_zero() || q.is_zero()) continue;
    ASSERT_EQ((p * q).degree(), p.degree() + q.degree());
  }
}

TEST(PolyPartial, MultiIndexMatchesIterated) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    Poly p = random_poly(rng, 3, 4, ArtinRing{});
    MultiIndex beta = random_exponent(rng, 3, 3);
    Poly it = p;
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < beta[v]; ++k) it = poly_partial(it, v);
    ASSERT_EQ(poly_partial(p, beta), it);
  }
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation({0, 0}), DomainError);
  EXPECT_THROW(Permutation({1, 2}), DomainError);
  EXPECT_EQ(Permutation::all(4).size(), 24u);
}

TEST(KoszulSign, Examples) {
  Permutation swap({1, 0});
  std::vector<int> odd{1, 1}, even{2, 2};
  EXPECT_EQ(koszul_sign(swap, odd), -1);
  EXPECT_EQ(koszul_sign(swap, even), 1);
  std::vector<int> mixed{3, 0, 2, 1};
  EXPECT_EQ(koszul_sign(Permutation::identity(4), mixed), 1);
  std::vector<int> three{1, 1, 1};
  EXPECT_THROW(koszul_sign(swap, three), DomainError);
}

TEST(KoszulSign, OddDegreesGiveSign) {
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> ones(static_cast<std::size_t>(m), 1), zeros(static_cast<std::size_t>(m), 0);
    for (const auto& s : Permutation::all(m)) {
      ASSERT_EQ(koszul_sign(s, zeros), 1);
      ASSERT_EQ(koszul_sign(s, ones), s.sign());
    }
  }
}

TEST(KoszulSign, MultiplicativeOnS4) {
  // Relabel y_j = x_{tau(j)}: y_{sigma(1)}..y_{sigma(m)} = x_{(tau sigma)(1)}..
  auto perms = Permutation::all(4);
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> d(4);
    for (auto& v : d) v = rng.uniform(0, 3);
    for (const auto& s : perms)
      for (const auto& tau : perms) {
        auto td = permute_degrees(tau, d);
        ASSERT_EQ(koszul_sign(tau * s, d), koszul_sign(s, td) * koszul_sign(tau, d));
      }
  }
  for (const auto& s : perms)
    for (const auto& tau : perms) ASSERT_EQ((s * tau).sign(), s.sign() * tau.sign());
}
