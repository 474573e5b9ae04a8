#include <gtest/gtest.h>

#include <map>
#include <string>

#include "gerbeflow/deligne.hpp"
#include "gerbeflow/errors.hpp"
#include "gerbeflow/sampling.hpp"

using namespace gerbeflow;

namespace {

Chart chart(int order) { return Chart{3, ArtinRing(order)}; }
Poly X(const Chart& c, int i) { return Poly::variable(i, 3, c.ring); }
Poly H(const Chart& c, int e) { return Poly::h_power(e, 3, c.ring); }
MultiVector dv(const Chart& c, std::vector<int> t, Poly f) { return MultiVector::basis(c, t, std::move(f)); }

// Truncated free associative algebra on letters 'a', 'b'.
struct Free {
  std::map<std::string, Rational> c;
  int max_len = 0;
  Free operator+(const Free& o) const {
    Free r = *this;
    for (const auto& [w, v] : o.c) r.c[w] += v;
    r.prune();
    return r;
  }
  Free operator*(const Free& o) const {
    Free r{{}, max_len};
    for (const auto& [w1, v1] : c)
      for (const auto& [w2, v2] : o.c)
        if (static_cast<int>(w1.size() + w2.size()) <= max_len) r.c[w1 + w2] += v1 * v2;
    r.prune();
    return r;
  }
  Free scaled(const Rational& s) const {
    Free r = *this;
    for (auto& [w, v] : r.c) v *= s;
    r.prune();
    return r;
  }
  void prune() {
    for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  }
  bool operator==(const Free& o) const { return c == o.c; }
};

Free letter(char x, int L) { return Free{{{std::string(1, x), Rational(1)}}, L}; }

Free exp_series(const Free& x, int L) {
  Free total{{{"", Rational(1)}}, L}, term = total;
  for (int k = 1; k <= L; ++k) {
    term = (term * x).scaled(Rational(1, k));
    total = total + term;
  }
  return total;
}

Free log_one_plus(const Free& z, int L) {
  Free total{{}, L}, power{{{"", Rational(1)}}, L};
  for (int k = 1; k <= L; ++k) {
    power = power * z;
    total = total + power.scaled(Rational((k & 1) ? 1 : -1, k));
  }
  return total;
}

MultiVector random_gauge(Rng& rng, const Chart& c) { return random_multivector(rng, c, 1, 2).times(H(c, 1)); }

}  // namespace

TEST(Dynkin, MatchesFreeAlgebraLogarithm) {
  for (int L = 1; L <= 5; ++L) {
    Free a = letter('a', L), b = letter('b', L);
    Free prod = exp_series(a, L) * exp_series(b, L);
    Free z = prod + Free{{{"", Rational(-1)}}, L};
    Free oracle = log_one_plus(z, L);
    Free zero{{}, L};
    Free dyn = dynkin_bch(
        a, b, L, zero, [](const Free& x, const Free& y) { return x * y + (y * x).scaled(-1); },
        [](const Free& x, const Rational& s) { return x.scaled(s); });
    ASSERT_EQ(dyn, oracle) << "L=" << L;
  }
}

TEST(IsMC, Examples) {
  auto c = chart(3);
  auto g = NilpotentDGLA::schouten(c);
  EXPECT_TRUE(is_mc(g, dv(c, {0, 1}, H(c, 1))).is_zero());
  MultiVector gp = dv(c, {0, 1}, X(c, 0)) + dv(c, {1, 2}, X(c, 1));
  MultiVector gamma = gp.times(H(c, 1));
  EXPECT_EQ(is_mc(g, gamma), schouten(gp, gp).times(H(c, 2)) * Rational(1, 2));
  EXPECT_FALSE(is_mc(g, gamma).is_zero());
  EXPECT_TRUE(is_mc(g, MultiVector(c)).is_zero());
  EXPECT_THROW(is_mc(g, dv(c, {0, 1}, c.one())), DomainError);
  EXPECT_THROW(is_mc(g, dv(c, {0}, H(c, 1))), DomainError);
}

TEST(Gauge, Examples) {
  auto c = chart(3);
  MultiVector dvec = dv(c, {0, 1}, c.one());
  auto ab = NilpotentDGLA::abelian(c, [dvec](const MultiVector& x) { return schouten(dvec, x); });
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    auto lambda = random_gauge(rng, c);
    auto gamma = random_multivector(rng, c, 2, 2).times(H(c, 1));
    ASSERT_EQ(gauge_action(ab, lambda, gamma), gamma - ab.d(lambda));
  }
  auto g = NilpotentDGLA::schouten(c);
  auto lambda = dv(c, {0}, X(c, 0)).times(H(c, 1));
  auto gamma = dv(c, {0, 1}, H(c, 1));
  EXPECT_EQ(gauge_action(g, lambda, gamma), dv(c, {0, 1}, H(c, 1)) - dv(c, {0, 1}, H(c, 2)));
  EXPECT_EQ(gauge_action(g, MultiVector(c), gamma), gamma);
}

TEST(Bch, Examples) {
  Rng rng(2);
  auto c2 = chart(2);
  auto g2 = NilpotentDGLA::schouten(c2);
  auto c3 = chart(3);
  auto g3 = NilpotentDGLA::schouten(c3);
  for (int t = 0; t < 10; ++t) {
    auto a = random_gauge(rng, c2), b = random_gauge(rng, c2);
    ASSERT_EQ(bch(g2, a, b), a + b);
    auto x = random_gauge(rng, c3), y = random_gauge(rng, c3);
    ASSERT_EQ(bch(g3, x, y), x + y + schouten(x, y) * Rational(1, 2));
    ASSERT_TRUE(bch(g3, x, bch_inverse(x)).is_zero());
  }
}

TEST(TwoCell, Examples) {
  auto c = chart(3);
  auto g = NilpotentDGLA::schouten(c);
  Rng rng(3);
  auto lambda = random_gauge(rng, c);
  auto gamma = dv(c, {0, 1}, H(c, 1));
  EXPECT_EQ(two_cell_target(g, lambda, MultiVector(c), gamma), lambda);
  auto ab = NilpotentDGLA::abelian(c);
  Poly f = X(c, 0) * X(c, 1) + X(c, 2);
  auto a = MultiVector::function(f * H(c, 1));
  EXPECT_EQ(two_cell_target(ab, lambda, a, gamma), lambda);
  // [d_x ^ d_y, f] = f_y d_x - f_x d_y with the bracket's sign convention.
  MultiVector v = (dv(c, {0}, poly_partial(f, 1)) - dv(c, {1}, poly_partial(f, 0))).times(H(c, 2));
  EXPECT_EQ(two_cell_target(g, lambda, a, gamma), lambda + v + schouten(lambda, v) * Rational(1, 2));
  EXPECT_THROW(two_cell_target(g, lambda, gamma, gamma), DomainError);
}

TEST(Properties, GaugeAndBchLaws) {
  Rng rng(4);
  for (int order = 2; order <= 4; ++order) {
    auto c = chart(order);
    MultiVector pi0 = dv(c, {0, 1}, c.one()) + dv(c, {1, 2}, c.one());
    std::vector<NilpotentDGLA> gs{NilpotentDGLA::schouten(c), NilpotentDGLA::schouten_twisted_by(pi0)};
    for (const auto& g : gs)
      for (int t = 0; t < 15; ++t) {
        // Constant bivectors are MC for both differentials; move them by a gauge first.
        MultiVector gamma0 = random_multivector(rng, c, 2, 0).times(H(c, 1));
        if (g.name() != "schouten") gamma0 = pi0.times(H(c, 1)) * rng.coefficient();
        ASSERT_TRUE(is_mc(g, gamma0).is_zero());
        MultiVector gamma = gauge_action(g, random_gauge(rng, c), gamma0);
        ASSERT_TRUE(is_mc(g, gamma).is_zero());
        auto a = random_gauge(rng, c), b = random_gauge(rng, c), e = random_gauge(rng, c);
        MultiVector moved = gauge_action(g, a, gamma);
        ASSERT_TRUE(is_mc(g, moved).is_zero());
        ASSERT_EQ(gauge_action(g, bch(g, a, b), gamma), gauge_action(g, a, gauge_action(g, b, gamma)));
        ASSERT_EQ(bch(g, a, bch(g, b, e)), bch(g, bch(g, a, b), e));
        ASSERT_EQ(two_cell_target(g, a, MultiVector(c), gamma), a);
      }
  }
}

TEST(Properties, GaugeTransportsCurvature) {
  Rng rng(5);
  auto c = chart(4);
  auto g = NilpotentDGLA::schouten(c);
  for (int t = 0; t < 10; ++t) {
    auto gamma = random_multivector(rng, c, 2, 2).times(H(c, 1));
    auto lambda = random_gauge(rng, c);
    MultiVector moved_curv = is_mc(g, gauge_action(g, lambda, gamma));
    MultiVector transported = is_mc(g, gamma);
    MultiVector term = transported;
    for (int k = 1; k < 4; ++k) {
      term = schouten(lambda, term) * Rational(1, k);
      transported += term;
    }
    ASSERT_EQ(moved_curv, transported);
  }
}

TEST(NilpotentDGLA, Validation) {
  auto c = chart(3);
  EXPECT_THROW(NilpotentDGLA::schouten_twisted_by(dv(c, {0, 1}, X(c, 2)) + dv(c, {1, 2}, X(c, 1))), DomainError);
  EXPECT_THROW(NilpotentDGLA::custom(c, {}, {}, "x"), DomainError);
  auto g = NilpotentDGLA::schouten(c);
  EXPECT_THROW(bch(g, dv(c, {0, 1}, H(c, 1)), MultiVector(c)), DomainError);
}
