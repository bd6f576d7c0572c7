#include "meshpoly/interlace.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace meshpoly;
using namespace meshpoly::testing;

namespace {

TEST(Wronskian, Examples) {
  EXPECT_EQ(wronskian(P({0, 1}), P({-1, 1})), P({1}));
  const auto p = from_roots({Q(1), Q(4), Q(7)});
  EXPECT_TRUE(wronskian(p, p).is_zero());
  EXPECT_TRUE(wronskian(p, Q(-5, 2) * p).is_zero());
}

TEST(NonnegOnReals, Examples) {
  EXPECT_TRUE(nonneg_on_reals(P({1})));
  EXPECT_FALSE(nonneg_on_reals(P({0, 1})));
  EXPECT_TRUE(nonneg_on_reals(from_roots({Q(1), Q(1)})));
  EXPECT_FALSE(nonneg_on_reals(P({-1, 0, 1})));
  EXPECT_TRUE(nonneg_on_reals(Polynomial()));
  EXPECT_TRUE(nonneg_on_reals(P({1, 0, 1})));
  EXPECT_FALSE(nonneg_on_reals(P({-1, 0, -1})));
}

TEST(NonnegOnReals, WitnessIsNegative) {
  Gen g(31);
  for (int t = 0; t < 100; ++t) {
    const auto w = g.polynomial(6);
    const auto v = nonneg_on_reals_verdict(w);
    if (v.holds) {
      for (long x = -20; x <= 20; ++x) EXPECT_GE(evaluate(w, Q(x, 2)), 0);
    } else {
      ASSERT_TRUE(v.negative_at.has_value());
      EXPECT_LT(evaluate(w, *v.negative_at), 0);
    }
  }
}

TEST(ProperPosition, Examples) {
  EXPECT_TRUE(proper_position(P({0, 1}), P({-1, 1})).holds);
  EXPECT_TRUE(proper_position(Polynomial(), from_roots({Q(1), Q(3)})).holds);
  EXPECT_TRUE(proper_position(from_roots({Q(1), Q(3)}), Polynomial()).holds);
  EXPECT_FALSE(proper_position(Polynomial(), P({1, 0, 1})).holds);

  const auto p = from_roots({Q(0), Q(2)});
  const auto q = from_roots({Q(1), Q(3)});
  const auto v = proper_position(p, q);
  EXPECT_TRUE(v.interlaces);
  // oracle: the Wronskian sign alone decides the direction
  EXPECT_EQ(v.wronskian_nonneg, nonneg_on_reals(wronskian(p, q)));
  EXPECT_TRUE(v.holds);
  EXPECT_FALSE(proper_position(q, p).holds);
}

TEST(ProperPosition, FailureWitnesses) {
  const auto v1 = proper_position(P({1, 0, 1}), P({0, 1}));
  EXPECT_EQ(v1.failure, ProperPositionVerdict::Failure::NotHyperbolic);
  EXPECT_EQ(v1.slot, 0u);

  const auto v2 = proper_position(from_roots({Q(0), Q(1), Q(2)}), P({1}));
  EXPECT_EQ(v2.failure, ProperPositionVerdict::Failure::DegreeGap);

  const auto v3 = proper_position(from_roots({Q(0), Q(1)}), from_roots({Q(2), Q(3)}));
  EXPECT_EQ(v3.failure, ProperPositionVerdict::Failure::InterlaceSlot);
  EXPECT_FALSE(v3.interlaces);

  const auto v4 = proper_position(from_roots({Q(1), Q(3)}), from_roots({Q(0), Q(2)}));
  EXPECT_TRUE(v4.interlaces);
  EXPECT_EQ(v4.failure, ProperPositionVerdict::Failure::WronskianNegative);
  ASSERT_TRUE(v4.point.has_value());
  EXPECT_LT(evaluate(wronskian(from_roots({Q(1), Q(3)}), from_roots({Q(0), Q(2)})), *v4.point), 0);
}

TEST(ProperPosition, SelfIsProper) {
  const auto p = from_roots({Q(1), Q(1), Q(5)});
  EXPECT_TRUE(proper_position(p, p).holds);
  EXPECT_TRUE(proper_position(p, Q(3) * p).holds);
}

TEST(ProperPosition, DichotomyForInterlacingPairs) {
  Gen g(32);
  for (int t = 0; t < 150; ++t) {
    // sorted merged roots assigned alternately
    const std::size_t n = g.integer(2, 8);
    auto merged = g.roots(n, -5, 5, Q(0));
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? a : b).push_back(merged[i]);
    const auto p = from_roots(a, g.nonzero_rational(-3, 3));
    const auto q = from_roots(b, g.nonzero_rational(-3, 3));
    const bool pq = proper_position(p, q).holds;
    const bool qp = proper_position(q, p).holds;
    if (wronskian(p, q).is_zero()) {
      EXPECT_TRUE(pq && qp);
    } else {
      EXPECT_NE(pq, qp) << "trial " << t;
    }
  }
}

TEST(ProperPosition, ConeProperty) {
  Gen g(33);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 80; ++t) {
    const std::size_t n = g.integer(1, 5);
    auto roots = g.roots(n, -5, 5, Q(1, 2));
    const auto p = from_roots(roots, 1);
    // q << p: roots of q interlace p's; build candidates from interleaved points
    auto make_q = [&]() {
      std::vector<Rational> qr;
      for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        qr.push_back(roots[i] + (roots[i + 1] - roots[i]) * g.rational(0, 1, 5));
      if (g.integer(0, 1)) qr.push_back(roots.back() + g.rational(0, 3));
      return from_roots(qr, g.nonzero_rational(-3, 3));
    };
    const auto q1 = make_q(), q2 = make_q();
    if (!proper_position(q1, p).holds || !proper_position(q2, p).holds) continue;
    ++checked;
    const Rational c1 = g.rational(0, 4), c2 = g.rational(0, 4);
    const auto sum = c1 * q1 + c2 * q2;
    EXPECT_TRUE(proper_position(sum, p).holds) << "trial " << t;
  }
  EXPECT_GE(checked, 40);
}

TEST(ProperPosition, ShearProperty) {
  Gen g(34);
  for (int t = 0; t < 30; ++t) {
    auto merged = g.roots(g.integer(2, 7), -5, 5, Q(1, 3));
    std::vector<Rational> a, b;
    for (std::size_t i = 0; i < merged.size(); ++i) (i % 2 == 0 ? a : b).push_back(merged[i]);
    auto p = from_roots(a), q = from_roots(b);
    if (!proper_position(p, q).holds) std::swap(p, q);
    ASSERT_TRUE(proper_position(p, q).holds);
    for (int k = 0; k < 20; ++k) {
      const Rational c = g.rational(-6, 6);
      EXPECT_TRUE(proper_position(p, q + c * p).holds);
      EXPECT_TRUE(proper_position(p + c * q, q).holds);
    }
  }
}

TEST(ClassMembership, Examples) {
  const auto p = from_roots({Q(1), Q(4), Q(7)});
  EXPECT_TRUE(class_membership(p, ClassSpec::hp_plus_mesh(1)));
  EXPECT_TRUE(class_membership(p, ClassSpec::hp_mesh(3)));
  EXPECT_FALSE(class_membership(p, ClassSpec::hp_mesh(Q(301, 100))));
  EXPECT_FALSE(class_membership(P({1, -1, 1}), ClassSpec::hp()));
  EXPECT_TRUE(class_membership(P({0, -1, 1}), ClassSpec::hp_plus_mesh(1)));
  EXPECT_FALSE(class_membership(from_roots({Q(-1), Q(1)}), ClassSpec::hp_plus_mesh(1)));
  EXPECT_TRUE(class_membership(P({5}), ClassSpec::hp_plus_mesh(100)));
  EXPECT_TRUE(class_membership(P({-3, 1}), ClassSpec::hp_plus_mesh(100)));
  EXPECT_FALSE(class_membership(P({3, 1}), ClassSpec::hp_plus_mesh(100)));
  EXPECT_FALSE(class_membership(Polynomial(), ClassSpec::hp()));
}

TEST(ClassMembership, MeshAtLeastAgreement) {
  Gen g(35);
  for (int t = 0; t < 100; ++t) {
    auto p = g.polynomial(5);
    if (p.is_zero()) continue;
    const Rational alpha = g.rational(0, 3);
    EXPECT_EQ(mesh_at_least(p, alpha), class_membership(p, ClassSpec::hp_mesh(alpha)));
  }
}

TEST(QuadraticCriterion, Examples) {
  EXPECT_TRUE(quadratic_hp1plus(1, 0, 0));
  EXPECT_FALSE(quadratic_hp1plus(1, 0, 1));
  EXPECT_TRUE(quadratic_hp1plus(1, 1, 2));
  // (1,1,2) is x(x-1) - 2x + 2 = (x-1)(x-2)
  EXPECT_EQ(P({2, -3, 1}), from_roots({Q(1), Q(2)}));
  EXPECT_THROW(quadratic_hp1plus(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(quadratic_hp1plus(1, -1, 1), std::invalid_argument);
}

TEST(QuadraticCriterion, AgreesWithClassMembershipOnGrid) {
  for (long a = 1; a <= 5; ++a)
    for (long b = 0; b <= 5; ++b)
      for (long c = 0; c <= 5; ++c)
        for (long den : {1, 2, 3}) {
          const Rational A = Q(a, den), B = Q(b, den), C = Q(c, den);
          const Polynomial quad({C, -A - 2 * B, A});
          EXPECT_EQ(quadratic_hp1plus(A, B, C), class_membership(quad, ClassSpec::hp_plus_mesh(1)))
              << A << " " << B << " " << C;
        }
}

}  // namespace
