#include "meshpoly/operators.hpp"

#include "meshpoly/interlace.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace meshpoly;
using namespace meshpoly::testing;

namespace {

const Polynomial kCubic147 = P({-28, 39, -12, 1});

Polynomial poch(std::size_t i) { return to_monomial(Polynomial::pochhammer(i)); }

TEST(Apply, Examples) {
  EXPECT_EQ(apply(delta(), Polynomial::x()), P({1}));
  EXPECT_EQ(apply(delta(), poch(2)), P({-2, 2}));
  const auto u = w_lambda(Q(3, 4));
  EXPECT_EQ(apply(u, kCubic147), Polynomial({Q(-28), Q(78), Q(-129, 4), Q(13, 4)}));
  EXPECT_TRUE(apply(FiniteDifferenceOperator(), kCubic147).is_zero());
}

TEST(MakeStandard, Examples) {
  Gen g(41);
  for (int t = 0; t < 20; ++t) {
    const auto p = g.polynomial(6);
    EXPECT_EQ(apply(w_lambda(0), p), p);
    EXPECT_EQ(apply(nabla_conjugate(), p), forward_difference(p));
  }
  for (std::size_t i = 0; i <= 5; ++i)
    EXPECT_EQ(apply(euler_xdelta(), poch(i)), Rational(static_cast<long>(i)) * poch(i));
  EXPECT_EQ(apply(riesz(1, 1), poch(2)), P({-2, 2}));
  EXPECT_EQ(apply(riesz(2, Q(1, 2)), P({0, 1})), P({1, -1}));
  EXPECT_THROW(riesz(1, -1), std::invalid_argument);
  EXPECT_EQ(make_standard(StandardKind::Riesz, 3, Q(3, 2)), riesz(3, Q(3, 2)));
  EXPECT_EQ(make_standard(StandardKind::Delta), delta());
}

TEST(Symbol, Examples) {
  EXPECT_EQ(symbol(delta()), P({1, -1}));
  const auto dd = compose(delta(), delta());
  EXPECT_EQ(dd, FiniteDifferenceOperator::from_constants({1, -2, 1}));
  EXPECT_EQ(symbol(dd), P({1, -1}) * P({1, -1}));
  EXPECT_THROW(symbol(euler_xdelta()), std::invalid_argument);
  EXPECT_EQ(operator_from_symbol(P({1, -2, 1})), dd);
}

TEST(Properties, Linearity) {
  Gen g(42);
  const std::vector<FiniteDifferenceOperator> ops{delta(), w_lambda(Q(7, 3)), euler_xdelta(),
                                                  riesz(Q(1, 2), Q(3, 2)), nabla_conjugate()};
  for (int t = 0; t < 100; ++t) {
    const auto& T = ops[t % ops.size()];
    const auto p = g.polynomial(6), q = g.polynomial(6);
    const Rational a = g.rational(-4, 4), b = g.rational(-4, 4);
    EXPECT_EQ(apply(T, a * p + b * q), a * apply(T, p) + b * apply(T, q));
  }
}

TEST(Properties, CompositionMatchesSequentialApplication) {
  Gen g(43);
  for (int t = 0; t < 100; ++t) {
    std::vector<Polynomial> ca(g.integer(1, 3)), cb(g.integer(1, 3));
    for (auto& c : ca) c = g.polynomial(t % 2 ? 0 : 2, 3);
    for (auto& c : cb) c = g.polynomial(t % 2 ? 0 : 2, 3);
    const FiniteDifferenceOperator A(ca), B(cb);
    const auto p = g.polynomial(5);
    EXPECT_EQ(apply(compose(A, B), p), apply(A, apply(B, p)));
    if (A.constant_coefficients() && B.constant_coefficients() && !A.is_zero() && !B.is_zero())
      EXPECT_EQ(symbol(compose(A, B)), symbol(A) * symbol(B));
  }
  EXPECT_THROW(compose(riesz(1, 2), delta()), std::invalid_argument);
}

TEST(Properties, ComposedPreserversPreserve) {
  Gen g(44);
  const auto T = compose(operator_from_symbol(P({-2, 1})), operator_from_symbol(P({1, -3})));
  for (int t = 0; t < 60; ++t) {
    const auto p = from_roots(g.roots(g.integer(1, 5), -5, 5, 1), g.nonzero_rational(-3, 3));
    ASSERT_TRUE(mesh_at_least(p, 1));
    EXPECT_TRUE(mesh_at_least(apply(T, p), 1)) << "trial " << t;
  }
}

TEST(DiagonalApply, Examples) {
  Gen g(45);
  for (int t = 0; t < 30; ++t) {
    const auto p = g.polynomial(7);
    EXPECT_EQ(diagonal_apply(DiagonalSequence::generator(P({1})), p), p);
    EXPECT_EQ(diagonal_apply(DiagonalSequence::generator(P({0, 1})), p), apply(euler_xdelta(), p));
  }
  const auto w = DiagonalSequence::generator(Polynomial({Rational(1), Q(3, 4)}));
  EXPECT_EQ(diagonal_apply(w, kCubic147), apply(w_lambda(Q(3, 4)), kCubic147));
  EXPECT_THROW(diagonal_apply(DiagonalSequence::table({1, 1}), kCubic147), std::out_of_range);
  EXPECT_THROW(DiagonalSequence::table({1})[3], std::out_of_range);
}

TEST(DiagonalApply, AgreesWithPochhammerExpansion) {
  Gen g(46);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> a(g.integer(1, 5));
    for (auto& v : a) v = g.rational(-3, 3);
    const auto p = g.polynomial(7);
    // sum a_i (x)_i Delta^i p, term by term
    Polynomial expected, diff = p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      expected = expected + a[i] * (poch(i) * diff);
      diff = backward_difference(diff);
    }
    std::vector<Rational> padded = a;
    padded.resize(8, Rational(0));
    const auto alpha = sequence_convert(padded, SequenceDirection::AToAlpha);
    EXPECT_EQ(diagonal_apply(DiagonalSequence::table(alpha), p), expected);
  }
}

TEST(BrentiMap, Examples) {
  EXPECT_EQ(brenti_map(P({0, 0, 1})), poch(2));
  EXPECT_EQ(brenti_map(P({0, 0, 0, 1})), from_roots({Q(0), Q(1), Q(2)}));
  EXPECT_EQ(*mesh_numeric(brenti_map(P({0, 0, 0, 1}))).exact, 1);
  EXPECT_EQ(brenti_map(P({0, -1, 1})), from_roots({Q(0), Q(2)}));
}

TEST(BrentiMap, NonnegativeRootsLandInHpPlus1) {
  Gen g(47);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> roots(g.integer(1, 6));
    for (auto& r : roots) r = g.rational(0, 6);
    const auto p = from_roots(roots, g.nonzero_rational(-3, 3));
    EXPECT_TRUE(class_membership(brenti_map(p), ClassSpec::hp_plus_mesh(1))) << "trial " << t;
  }
}

TEST(BulletProduct, Examples) {
  const auto q = kCubic147;
  EXPECT_EQ(bullet_product(P({1}), P({7}), 0), P({7}));
  EXPECT_EQ(bullet_product(P({1}), P({0, 1}), 1), P({1}));  // (Nabla x)(x) = 1 at d = 1
  EXPECT_EQ(bullet_product(P({0, 1}), P({0, 1}), 1), P({0, 1}));
  EXPECT_EQ(bullet_product(poch(2), poch(2), 2), Q(2) * poch(2));
  EXPECT_THROW(bullet_product(q, P({1}), 2), std::invalid_argument);
}

TEST(BulletProduct, BilinearAndDegreeBounded) {
  Gen g(48);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = g.integer(0, 5);
    const auto p1 = g.polynomial(d), p2 = g.polynomial(d), q = g.polynomial(d);
    const Rational a = g.rational(-3, 3), b = g.rational(-3, 3);
    EXPECT_EQ(bullet_product(a * p1 + b * p2, q, d),
              a * bullet_product(p1, q, d) + b * bullet_product(p2, q, d));
    EXPECT_EQ(bullet_product(q, a * p1 + b * p2, d),
              a * bullet_product(q, p1, d) + b * bullet_product(q, p2, d));
    EXPECT_LE(bullet_product(p1, q, d).degree(), Degree(d));
  }
}

TEST(SequenceFromPoly, Examples) {
  const auto s = sequence_from_poly(P({1, 1}), 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s[i], static_cast<long>(i + 1));
  const auto e = sequence_from_poly(P({0, 1}), 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(e[i], static_cast<long>(i));
  const auto sq = sequence_from_poly(P({1, 2, 1}), 6);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(sq[i], static_cast<long>((i + 1) * (i + 1)));
}

TEST(SequenceFromPoly, RejectsBadRoots) {
  try {
    sequence_from_poly(from_roots({Q(-1), Q(2)}), 4);
    FAIL() << "expected RootConditionViolated";
  } catch (const RootConditionViolated& e) {
    ASSERT_TRUE(e.witness().has_value());
    EXPECT_LE(e.witness()->lo, 2);
    EXPECT_GE(e.witness()->hi, 2);
  }
  EXPECT_THROW(sequence_from_poly(P({1, 0, 1}), 4), RootConditionViolated);
  EXPECT_THROW(sequence_from_poly(Polynomial(), 4), RootConditionViolated);
}

TEST(SequenceFromPoly, SquareSequencePreservesHpPlus1) {
  Gen g(49);
  const auto s = sequence_from_poly(P({1, 2, 1}), 8);
  for (int t = 0; t < 200; ++t) {
    const auto p = from_roots(g.roots(g.integer(1, 6), 0, 5, 1), g.nonzero_rational(-3, 3));
    ASSERT_TRUE(class_membership(p, ClassSpec::hp_plus_mesh(1)));
    EXPECT_TRUE(class_membership(diagonal_apply(s, p), ClassSpec::hp_plus_mesh(1))) << "trial " << t;
  }
}

TEST(HerpouFactor, Examples) {
  // Delta (x)_3 = 3 (x-1)(x-2), so R_3 = 3 (degree 0 < k since Q(1) = 0)
  EXPECT_EQ(herpou_factor(delta(), 3), P({3}));
  for (std::size_t i = 0; i < 6; ++i)
    EXPECT_EQ(herpou_factor(operator_from_symbol(P({5})), i).degree(), Degree(0));
  const auto R10 = herpou_factor(operator_from_symbol(P({1, 1})), 10);
  EXPECT_EQ(R10.degree(), Degree(1));
  EXPECT_THROW(herpou_factor(delta(), 0), std::invalid_argument);
}

TEST(HerpouFactor, FactorizationHoldsForRandomSymbols) {
  Gen g(50);
  for (int t = 0; t < 50; ++t) {
    auto sym = g.polynomial(4, 4);
    if (sym.is_zero()) continue;
    const auto T = operator_from_symbol(sym);
    const std::size_t k = T.order().value();
    for (std::size_t i = k; i < k + 6; ++i) {
      const auto R = herpou_factor(T, i);
      std::vector<Rational> roots;
      for (std::size_t j = k; j < i; ++j) roots.push_back(Rational(static_cast<long>(j)));
      EXPECT_EQ(from_roots(roots) * R, apply(T, poch(i)));
      EXPECT_LE(R.degree(), Degree(k));
    }
  }
}

TEST(HerpouLimit, RescaledFactorApproachesLimit) {
  // Q = 1 + t: R_i = 2x - i, so R_i(ix)/i = 2x - 1 with root 1/2 for every i
  const auto T1 = operator_from_symbol(P({1, 1}));
  EXPECT_EQ(herpou_limit(P({1, 1})), P({-1, 2}));
  for (std::size_t i : {1u, 5u, 10u, 40u})
    EXPECT_EQ(herpou_rescaled(herpou_factor(T1, i), i, 1), P({-1, 2}));

  // Q = (1 + t)^2: limit (2x - 1)^2, approached coefficient-wise
  const auto sym = P({1, 2, 1});
  const auto limit = herpou_limit(sym);
  EXPECT_EQ(limit, P({1, -4, 4}));
  const auto T = operator_from_symbol(sym);
  Rational previous = -1;
  for (std::size_t i : {2u, 5u, 10u, 40u, 160u}) {
    const auto R = herpou_rescaled(herpou_factor(T, i), i, 2);
    Rational err = 0;
    for (std::size_t c = 0; c <= 2; ++c) err = std::max(err, Rational(abs(R.coeff(c) - limit.coeff(c))));
    if (previous >= 0) EXPECT_LT(err, previous) << i;
    previous = err;
  }
  EXPECT_LT(previous, Q(1, 20));
}

}  // namespace
