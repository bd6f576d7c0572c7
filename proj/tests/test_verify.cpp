#include "meshpoly/verify.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace meshpoly;
using namespace meshpoly::testing;

namespace {

const Polynomial kCubic147 = P({-28, 39, -12, 1});

Polynomial poch(std::size_t i) { return to_monomial(Polynomial::pochhammer(i)); }

TEST(Rng, DeterministicPerTrial) {
  Rng a = Rng::for_trial(7, 3), b = Rng::for_trial(7, 3), c = Rng::for_trial(7, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng r(1);
  for (int t = 0; t < 1000; ++t) {
    const long v = r.integer(-3, 4);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 4);
    const Rational q = r.rational(Q(-1, 2), 2, 5);
    EXPECT_GE(q, Q(-1, 2));
    EXPECT_LE(q, 2);
  }
}

TEST(Fixtures, SameSeedSameFixture) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng a = Rng::for_trial(99, t), b = Rng::for_trial(99, t);
    EXPECT_EQ(gen_fixture(ClassSpec::hp_plus_mesh(1), 4, a), gen_fixture(ClassSpec::hp_plus_mesh(1), 4, b));
  }
  Rng r(5);
  const auto c = gen_fixture(ClassSpec::hp_mesh(1), 0, r);
  EXPECT_EQ(c.degree(), Degree(0));
}

TEST(Fixtures, GeneratorSoundness) {
  const std::vector<ClassSpec> specs{ClassSpec::hp(), ClassSpec::hp_mesh(1),
                                     ClassSpec::hp_plus_mesh(1), ClassSpec::hp_mesh(Q(3, 2))};
  std::size_t n = 0;
  for (std::uint64_t t = 0; n < 10000; ++t) {
    Rng rng = Rng::for_trial(2024, t);
    const auto& spec = specs[t % specs.size()];
    const std::size_t deg = 1 + t % 6;
    const auto roots = gen_fixture_roots(spec, deg, rng);
    const auto p = from_roots(roots, gen_lead(rng));
    // independent oracle: sorted roots, adjacent gaps against the bound
    ASSERT_EQ(roots.size(), deg);
    for (std::size_t i = 1; i < roots.size(); ++i)
      ASSERT_GE(roots[i] - roots[i - 1], spec.mesh_bound.value_or(0));
    if (spec.require_nonneg_roots) ASSERT_GE(roots.front(), 0);
    ASSERT_TRUE(class_membership(p, spec)) << spec.name();
    ++n;
  }
}

TEST(MeshMonotone, Examples) {
  const auto v = check_mesh_monotone(transform::Operator{riesz(1, 1)}, kCubic147, 1);
  EXPECT_EQ(v.status, Status::Holds);
  // oracle: the image is 3(x-2)(x-5) + ..., check its mesh directly
  const auto image = apply(riesz(1, 1), kCubic147);
  EXPECT_GE(mesh_numeric(image).lower, 3);

  EXPECT_EQ(check_mesh_monotone(transform::Operator{riesz(3, 2)}, P({-5, 1}), 2).status, Status::Holds);
  const auto d = check_mesh_monotone(transform::DerivativeRiesz{5}, from_roots({Q(0), Q(2)}), 0);
  EXPECT_EQ(d.status, Status::Holds);
  // x^2 - 2x - 5(2x - 2) = x^2 - 12x + 10: roots 6 +- sqrt(26), gap 2 sqrt(26) > 2
  EXPECT_EQ(derivative_riesz(from_roots({Q(0), Q(2)}), 5), P({10, -12, 1}));

  EXPECT_EQ(check_mesh_monotone(transform::Operator{riesz(1, 1)}, from_roots({Q(0), Q(1, 2)}), 1).status,
            Status::Skipped);
  EXPECT_EQ(check_mesh_monotone(transform::DerivativeRiesz{1}, P({1, 0, 1}), 0).status, Status::Skipped);
}

TEST(MeshMonotone, FailureProducesReplayableWitness) {
  // U = 1 + (3/4) x Delta shrinks the mesh of (x-1)(x-4)(x-7)
  const transform::Operator U{w_lambda(Q(3, 4))};
  const auto v = check_mesh_monotone(U, kCubic147, 1);
  ASSERT_EQ(v.status, Status::Fails);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->violated, ClassSpec::hp_mesh(3));
  EXPECT_TRUE(replay(*v.witness));
  auto tampered = *v.witness;
  tampered.image = tampered.image + P({1});
  EXPECT_FALSE(replay(tampered));
}

TEST(Herpou, SufficiencyForNonnegativeRoots) {
  HerpouConfig cfg;
  cfg.trials = 100;
  for (const auto& Q : {P({1, -1}), P({-2, 1}), P({1, -2, 1}) * P({-3, 1})}) {
    const auto v = herpou_verdict(Q, cfg);
    EXPECT_EQ(v.status, Status::Holds);
    EXPECT_EQ(v.checked, 100u);
    EXPECT_FALSE(herpou_scan(Q, 30).index.has_value());
  }
  EXPECT_THROW(herpou_verdict(Polynomial(), cfg), std::invalid_argument);
}

// Oracle: smallest i with T((x)_i) outside HP>=1 by the full mesh test.
std::optional<std::size_t> brute_force_index(const Polynomial& Q, std::size_t i_max) {
  const auto T = operator_from_symbol(Q);
  for (std::size_t i = *T.order(); i <= i_max; ++i) {
    const auto image = apply(T, poch(i));
    if (!image.is_zero() && !mesh_at_least(image, 1)) return i;
  }
  return std::nullopt;
}

TEST(Herpou, NecessityWitnesses) {
  HerpouConfig cfg;
  for (const auto& Q : {P({1, 1}), P({1, 1}) * P({1, -1}), P({3, 1}), P({1, 0, 1}), P({2, 1}) * P({-1, 1})}) {
    const auto v = herpou_verdict(Q, cfg);
    ASSERT_EQ(v.status, Status::Fails) << v.note;
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_TRUE(replay(*v.witness));
    const auto scan = herpou_scan(Q, 64);
    EXPECT_EQ(scan.index, brute_force_index(Q, 40));
    EXPECT_LE(*scan.index, 64u);
  }
  EXPECT_EQ(herpou_scan(P({1, 1}), 64).index, 2u);
}

TEST(Herpou, ScanAgreesWithBruteForceOnRandomSymbols) {
  Gen g(61);
  for (int t = 0; t < 40; ++t) {
    auto Q = g.polynomial(3, 4);
    if (Q.is_zero()) continue;
    EXPECT_EQ(herpou_scan(Q, 14).index, brute_force_index(Q, 14)) << t;
  }
}

TEST(Altn, Examples) {
  EXPECT_EQ(check_altn(poch(2)).status, Status::Holds);
  EXPECT_EQ(check_altn(from_roots({Q(0), Q(2)})).status, Status::Holds);
  const auto p = from_roots({Q(1), Q(2)});
  EXPECT_EQ(to_pochhammer(p).coeffs(), (std::vector<Rational>{2, -2, 1}));
  EXPECT_EQ(check_altn(p).status, Status::Holds);
  EXPECT_EQ(check_altn(-p).status, Status::Skipped);
  EXPECT_EQ(check_altn(from_roots({Q(0), Q(1, 2)})).status, Status::Skipped);
}

TEST(Altn, HoldsOnFixtures) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = Rng::for_trial(71, t);
    auto p = gen_fixture(ClassSpec::hp_plus_mesh(1), rng.integer(0, 7), rng);
    if (p.leading() < 0) p = -p;
    EXPECT_EQ(check_altn(p).status, Status::Holds);
  }
}

TEST(Signs, OppositeSignsGiveWitness) {
  const auto v = signs_witness({1, 0, -2});
  ASSERT_EQ(v.status, Status::Fails);
  EXPECT_TRUE(replay(*v.witness));
  EXPECT_EQ(signs_witness({1, 2, 0, 5}).status, Status::Inconclusive);
  EXPECT_EQ(signs_witness({0, -1, -3}).status, Status::Inconclusive);
  Gen g(72);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> alpha(g.integer(2, 7));
    for (auto& a : alpha) a = g.rational(-3, 3);
    const long i = g.integer(0, static_cast<long>(alpha.size()) - 2);
    const long j = g.integer(i + 1, static_cast<long>(alpha.size()) - 1);
    alpha[i] = g.nonzero_rational(1, 3);
    alpha[j] = -g.nonzero_rational(1, 3);
    const auto w = signs_witness(alpha, g.nonzero_rational(0, 3));
    ASSERT_EQ(w.status, Status::Fails);
    EXPECT_TRUE(replay(*w.witness));
  }
}

TEST(Alink, Examples) {
  const auto v = alink_witness(2, 1, 1, 0);
  ASSERT_EQ(v.status, Status::Fails);
  EXPECT_EQ(v.witness->input, from_roots({Q(1), Q(2)}));
  EXPECT_EQ(v.witness->image, P({4, -3, 1}));
  EXPECT_TRUE(replay(*v.witness));
  EXPECT_EQ(alink_witness(1, 1, 1, 0).status, Status::Inconclusive);
  EXPECT_EQ(alink_witness(1, 2, 4, 0).status, Status::Inconclusive);
  EXPECT_THROW(alink_witness(1, 0, 0, 0), std::invalid_argument);
}

TEST(Alink, ContrapositiveOnGrid) {
  for (std::size_t m = 0; m <= 3; ++m)
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 1; c <= 4; ++c) {
          const auto v = alink_witness(a, b, c, m);
          if (a > b) {
            ASSERT_EQ(v.status, Status::Fails);
            EXPECT_TRUE(replay(*v.witness));
            EXPECT_TRUE(class_membership(v.witness->input, ClassSpec::hp_plus_mesh(1)));
          } else {
            EXPECT_EQ(v.status, Status::Inconclusive);
          }
        }
}

TEST(Dms, KnownSequencesPass) {
  DmsConfig cfg;
  cfg.trials = 150;
  cfg.claim2_lambda = Q(7, 3);
  EXPECT_EQ(dms_test(sequence_from_poly(Polynomial({Rational(1), Q(7, 3)}), 7), cfg).status, Status::Holds);
  cfg.claim2_lambda.reset();
  // only alpha_2, alpha_3 nonzero
  EXPECT_EQ(dms_test(DiagonalSequence::table({0, 0, 1, 5, 0, 0, 0}), cfg).status, Status::Holds);
  // {(n)_2}: the operator (x)_2 Delta^2
  EXPECT_EQ(dms_test(DiagonalSequence::generator(poch(2)), cfg).status, Status::Holds);
  // {n (n - 1) (n + 2)}: (x)_2 q with q root -2 <= 2
  EXPECT_EQ(dms_test(DiagonalSequence::generator(poch(2) * P({2, 1})), cfg).status, Status::Holds);
}

TEST(Dms, NonSequencesFail) {
  DmsConfig cfg;
  cfg.trials = 150;
  const auto mixed = dms_test(DiagonalSequence::table({1, -1, 1, 1, 1, 1, 1}), cfg);
  ASSERT_EQ(mixed.status, Status::Fails);
  EXPECT_TRUE(replay(*mixed.witness));
  const auto gap = dms_test(DiagonalSequence::table({1, 0, 1, 0, 0, 0, 0}), cfg);
  ASSERT_EQ(gap.status, Status::Fails);
  EXPECT_TRUE(replay(*gap.witness));
  const auto decreasing = dms_test(DiagonalSequence::geometric(Q(1, 2), 7), cfg);
  ASSERT_EQ(decreasing.status, Status::Fails);
  EXPECT_TRUE(replay(*decreasing.witness));
  EXPECT_THROW(dms_test(DiagonalSequence::table({1, 1}), cfg), std::out_of_range);
}

TEST(Dms, PassingSequencesAreMonotoneWhereAlinkApplies) {
  DmsConfig cfg;
  cfg.trials = 60;
  cfg.max_degree = 5;
  Gen g(73);
  std::size_t passed = 0;
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> alpha(6);
    if (t % 2 == 0) {
      std::vector<Rational> roots(g.integer(1, 3));
      for (auto& r : roots) r = g.rational(-4, 0);
      alpha = sequence_from_poly(from_roots(roots), 6).values();
    } else {
      for (auto& a : alpha) a = g.rational(0, 4, 2);
    }
    const auto v = dms_test(DiagonalSequence::table(alpha), cfg);
    if (v.status != Status::Holds) continue;
    ++passed;
    for (std::size_t m = 0; m + 2 < alpha.size(); ++m)
      if (alpha[m + 2] > 0) EXPECT_LE(alpha[m], alpha[m + 1]) << t;
  }
  EXPECT_GT(passed, 0u);
}

TEST(Claim2, ProofPathOnFixtures) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::for_trial(74, t);
    const auto p = gen_fixture(ClassSpec::hp_plus_mesh(1), rng.integer(1, 6), rng);
    for (const Rational& lambda : {Q(0), Q(1, 4), Q(1), Q(10)})
      EXPECT_EQ(check_claim2_proof_path(lambda, p).status, Status::Holds);
  }
  EXPECT_EQ(check_claim2_proof_path(-1, kCubic147).status, Status::Skipped);
}

TEST(Remark2, Witnesses) {
  SearchBudget cfg;
  for (const Rational& rho : {Q(1, 2), Q(1, 10)}) {
    const auto v = remark2_witness(rho, cfg);
    ASSERT_EQ(v.status, Status::Fails);
    EXPECT_LE(v.witness->input.degree(), Degree(4));
    EXPECT_TRUE(class_membership(v.witness->input, ClassSpec::hp_plus_mesh(1)));
    EXPECT_TRUE(replay(*v.witness));
  }
  // (x-1)(x-2) -> (1/4)(x^2 - 5x + 8)
  EXPECT_EQ(diagonal_apply(DiagonalSequence::geometric(Q(1, 2), 3), from_roots({Q(1), Q(2)})),
            Q(1, 4) * P({8, -5, 1}));
  cfg.trials = 50;
  EXPECT_EQ(remark2_witness(1, cfg).status, Status::Inconclusive);
  EXPECT_THROW(remark2_witness(0, cfg), std::invalid_argument);
}

TEST(Lemma1, Witnesses) {
  SearchBudget cfg;
  const auto d = lemma1_violation(delta(), cfg);
  ASSERT_EQ(d.status, Status::Fails);
  EXPECT_EQ(d.witness->input, P({0, 0, 0, 1}));
  EXPECT_EQ(d.witness->image, P({1, -3, 3}));
  EXPECT_TRUE(replay(*d.witness));
  const auto s = lemma1_violation(FiniteDifferenceOperator::from_constants({1, 1}), cfg);
  ASSERT_EQ(s.status, Status::Fails);
  EXPECT_EQ(s.witness->input, P({0, 0, 1}));
  EXPECT_EQ(s.witness->image, P({1, -2, 2}));
  EXPECT_TRUE(replay(*s.witness));
  EXPECT_EQ(lemma1_violation(FiniteDifferenceOperator({Polynomial(), P({-1, 1})}), cfg).status,
            Status::Skipped);
  EXPECT_EQ(lemma1_violation(w_lambda(1), cfg).status, Status::Fails);
}

TEST(ClassicalProbe, Examples) {
  ClassicalProbeConfig cfg;
  cfg.trace_rescaling = true;
  EXPECT_EQ(classical_multiplier_probe(DiagonalSequence::generator(P({1, 1})), cfg).status, Status::Holds);
  EXPECT_EQ(classical_multiplier_probe(DiagonalSequence::generator(P({1})), cfg).status, Status::Holds);
  EXPECT_EQ(classical_multiplier_probe(DiagonalSequence::generator(P({0, 1})), cfg).status, Status::Holds);
  EXPECT_EQ(classical_multiplier_probe(DiagonalSequence::table({1, -1, 1, 1, 1, 1, 1}), cfg).status,
            Status::Skipped);
}

TEST(Brenti, ClassPreservedOnNonnegativeRootedInputs) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::for_trial(75, t);
    const auto p = gen_nonneg_rooted(rng.integer(0, 6), rng);
    const auto image = apply_transform(transform::Brenti{}, p);
    EXPECT_TRUE(class_membership(image, ClassSpec::hp_plus_mesh(1)));
  }
}

}  // namespace
