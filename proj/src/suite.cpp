#include "meshpoly/suite.hpp"

#include <sstream>

namespace meshpoly {

namespace {

std::size_t scaled(const SuiteOptions& opt, std::size_t reference) {
  return std::max<std::size_t>(1, reference * opt.trials / 500);
}

// Stream seeds: one per entry so entries do not share fixtures.
std::uint64_t stream(const SuiteOptions& opt, std::uint64_t entry) { return derive_seed(opt.seed, entry); }

class Tally {
 public:
  Tally(std::string id, std::string title) {
    r_.id = std::move(id);
    r_.title = std::move(title);
    r_.passed = true;
  }

  // Sufficiency-type check: Holds or Skipped are fine, Fails is fatal.
  bool expect_holds(const Verdict& v, const std::string& context) {
    if (v.status == Status::Skipped) return true;
    ++r_.checked;
    if (v.status == Status::Holds) return true;
    fail(context + ": " + status_name(v.status) + (v.note.empty() ? "" : " (" + v.note + ")"), v.witness);
    return false;
  }

  // Witness-type check: must fail with a witness that replays.
  bool expect_witness(const Verdict& v, const std::string& context) {
    ++r_.checked;
    if (v.status == Status::Fails && v.witness && replay(*v.witness)) return true;
    fail(context + ": expected a replayable witness, got " + status_name(v.status), std::nullopt);
    return false;
  }

  bool expect(bool ok, const std::string& context) {
    ++r_.checked;
    if (!ok) fail(context, std::nullopt);
    return ok;
  }

  bool ok() const { return r_.passed; }

  SuiteResult finish(std::string detail = {}) {
    if (r_.passed) {
      std::ostringstream os;
      os << r_.checked << " checks";
      if (!detail.empty()) os << "; " << detail;
      r_.detail = os.str();
    }
    return r_;
  }

 private:
  void fail(std::string detail, std::optional<Witness> w) {
    if (!r_.passed) return;
    r_.passed = false;
    r_.detail = std::move(detail);
    r_.failure = std::move(w);
  }

  SuiteResult r_;
};

std::size_t random_degree(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<long>(lo), static_cast<long>(hi)));
}

}  // namespace

SuiteResult suite_herpou_sufficiency(const SuiteOptions& opt) {
  Tally tally("herpou_sufficiency", "constant-coefficient operators with symbol roots >= 0 preserve HP>=1");
  const std::size_t n_symbols = scaled(opt, 20), n_fixtures = scaled(opt, 500);
  std::vector<Polynomial> symbols;
  Rng srng(stream(opt, 1));
  while (symbols.size() < n_symbols) {
    std::vector<Rational> roots(random_degree(srng, 1, 4));
    for (auto& r : roots) r = srng.rational(0, 3, 3);
    symbols.push_back(from_roots(roots, gen_lead(srng)));
  }
  std::vector<Polynomial> fixtures;
  for (std::size_t t = 0; t < n_fixtures; ++t) {
    Rng rng = Rng::for_trial(stream(opt, 2), t);
    fixtures.push_back(gen_fixture(ClassSpec::hp_mesh(1), random_degree(rng, 0, 8), rng));
  }
  for (std::size_t s = 0; s < symbols.size() && tally.ok(); ++s) {
    const transform::Operator T{operator_from_symbol(symbols[s])};
    for (std::size_t t = 0; t < fixtures.size(); ++t)
      if (!tally.expect_holds(check_class_preserved(T, fixtures[t], ClassSpec::hp_mesh(1), "herpou"),
                              "symbol " + std::to_string(s) + ", fixture " + std::to_string(t)))
        break;
  }
  return tally.finish(std::to_string(n_symbols) + " symbols x " + std::to_string(n_fixtures) + " fixtures");
}

SuiteResult suite_herpou_necessity(const SuiteOptions&) {
  Tally tally("herpou_necessity", "symbols with a negative root yield a Pochhammer witness");
  HerpouConfig cfg;
  cfg.i_max = 64;
  std::string found;
  for (const auto& Q : {Polynomial({Rational(1), Rational(1)}),
                        Polynomial({Rational(1), Rational(1)}) * Polynomial({Rational(1), Rational(-1)})}) {
    const Verdict v = herpou_verdict(Q, cfg);
    tally.expect_witness(v, Q.degree() == Degree(1) ? "1 + t" : "1 - t^2");
    if (v.status == Status::Fails) found += (found.empty() ? "" : ", ") + v.note;
  }
  return tally.finish(found);
}

SuiteResult suite_fd_riesz(const SuiteOptions& opt) {
  Tally tally("fd_riesz", "p - lambda p(x - alpha) does not decrease the mesh on HP>=alpha");
  const std::vector<Rational> alphas{Rational(1), Rational(3, 2), Rational(2)};
  const std::vector<Rational> lambdas{Rational(1, 2), Rational(1), Rational(3)};
  const std::size_t n = scaled(opt, 300);
  for (std::size_t t = 0; t < n && tally.ok(); ++t) {
    Rng rng = Rng::for_trial(stream(opt, 3), t);
    const Rational& alpha = alphas[t % 3];
    const Rational& lambda = lambdas[(t / 3) % 3];
    const transform::Operator T{riesz(lambda, alpha)};
    const Polynomial p = gen_fixture(ClassSpec::hp_mesh(alpha), random_degree(rng, 1, 6), rng);
    tally.expect_holds(check_mesh_monotone(T, p, alpha), "mesh, trial " + std::to_string(t));
    // second clause: lambda >= 1 preserves HP+>=alpha
    const Rational lam_plus = lambdas[1 + t % 2];
    const Polynomial q = gen_fixture(ClassSpec::hp_plus_mesh(alpha), random_degree(rng, 1, 6), rng);
    tally.expect_holds(check_class_preserved(transform::Operator{riesz(lam_plus, alpha)}, q,
                                             ClassSpec::hp_plus_mesh(alpha), "fd_riesz_plus"),
                       "HP+ clause, trial " + std::to_string(t));
  }
  return tally.finish();
}

SuiteResult suite_riesz(const SuiteOptions& opt) {
  Tally tally("riesz", "p - lambda p' does not decrease the mesh of real-rooted p");
  const std::vector<Rational> lambdas{Rational(-2), Rational(0), Rational(1, 2), Rational(5)};
  const std::size_t n = scaled(opt, 300);
  for (std::size_t t = 0; t < n && tally.ok(); ++t) {
    Rng rng = Rng::for_trial(stream(opt, 4), t);
    const Polynomial p = gen_fixture(ClassSpec::hp(), random_degree(rng, 1, 6), rng);
    for (const auto& lambda : lambdas)
      if (!tally.expect_holds(check_mesh_monotone(transform::DerivativeRiesz{lambda}, p, 0),
                              "trial " + std::to_string(t) + ", lambda " + to_string(lambda)))
        break;
  }
  return tally.finish();
}

SuiteResult suite_dms(const SuiteOptions& opt) {
  Tally tally("dms", "{1 + lambda i} and {phi(i)} are discrete multiplier sequences");
  DmsConfig cfg;
  cfg.trials = scaled(opt, 500);
  cfg.max_degree = 6;
  std::uint64_t entry = 10;
  for (const Rational& lambda : {Rational(0), Rational(1, 4), Rational(1), Rational(10)}) {
    cfg.seed = stream(opt, entry++);
    cfg.claim2_lambda = lambda;
    const auto A = sequence_from_poly(Polynomial({Rational(1), lambda}), cfg.max_degree + 1);
    tally.expect_holds(dms_test(A, cfg), "1 + " + to_string(lambda) + " i");
  }
  cfg.claim2_lambda.reset();
  const Polynomial x = Polynomial::x(), one_x({Rational(1), Rational(1)});
  const std::vector<std::pair<const char*, Polynomial>> phis{
      {"x", x}, {"1 + x", one_x}, {"(1 + x)^2", one_x * one_x}, {"x (1 + x)", x * one_x}};
  for (const auto& [name, phi] : phis) {
    cfg.seed = stream(opt, entry++);
    const auto A = sequence_from_poly(phi, cfg.max_degree + 1);
    tally.expect_holds(dms_test(A, cfg), std::string("phi = ") + name);
  }
  return tally.finish("8 sequences x " + std::to_string(cfg.trials) + " fixtures");
}

SuiteResult suite_brenti_altn_signs(const SuiteOptions& opt) {
  Tally tally("brenti_altn_signs", "Brenti map, alternating Pochhammer signs, sign uniformity");
  const std::size_t n = scaled(opt, 200);
  for (std::size_t t = 0; t < n && tally.ok(); ++t) {
    Rng rng = Rng::for_trial(stream(opt, 20), t);
    const Polynomial p = gen_nonneg_rooted(random_degree(rng, 0, 6), rng);
    const Polynomial image = brenti_map(p);
    if (!tally.expect(class_membership(image, ClassSpec::hp_plus_mesh(1)), "brenti trial " + std::to_string(t)))
      break;
    Polynomial q = gen_fixture(ClassSpec::hp_plus_mesh(1), random_degree(rng, 0, 7), rng);
    if (q.leading() < 0) q = -q;
    tally.expect_holds(check_altn(q), "altn trial " + std::to_string(t));

    std::vector<Rational> alpha(random_degree(rng, 2, 7));
    for (auto& a : alpha) a = rng.rational(-3, 3);
    const long i = rng.integer(0, static_cast<long>(alpha.size()) - 2);
    const long j = rng.integer(i + 1, static_cast<long>(alpha.size()) - 1);
    alpha[i] = rng.rational(Rational(1, 3), 3, 3);
    alpha[j] = -rng.rational(Rational(1, 3), 3, 3);
    if (rng.chance(1, 2)) std::swap(alpha[i], alpha[j]);
    tally.expect_witness(signs_witness(alpha, rng.rational(Rational(1, 4), 3)),
                         "signs trial " + std::to_string(t));
  }
  return tally.finish();
}

SuiteResult suite_quadratic(const SuiteOptions& opt) {
  Tally tally("quadratic", "A x(x-1) - 2 B x + C in HP+>=1 iff A C <= B^2 + A B");
  auto agree = [&](const Rational& A, const Rational& B, const Rational& C) {
    const Polynomial quad({C, -A - 2 * B, A});
    return tally.expect(quadratic_hp1plus(A, B, C) == class_membership(quad, ClassSpec::hp_plus_mesh(1)),
                        "disagreement at " + to_string(A) + ", " + to_string(B) + ", " + to_string(C));
  };
  for (long a = 1; a <= 5; ++a)
    for (long b = 0; b <= 5; ++b)
      for (long c = 0; c <= 5; ++c) agree(a, b, c);
  Rng rng(stream(opt, 30));
  for (std::size_t t = 0; t < 50; ++t)
    agree(rng.rational(Rational(1, 7), 5, 7), rng.rational(0, 5, 7), rng.rational(0, 5, 7));
  return tally.finish();
}

SuiteResult suite_alink(const SuiteOptions&) {
  Tally tally("alink", "a drop alpha_m > alpha_(m+1) before alpha_(m+2) > 0 is never a multiplier sequence");
  for (std::size_t m = 0; m <= 2; ++m)
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; b <= 4; ++b)
        for (long c = 1; c <= 4; ++c) {
          if (a <= b) continue;
          tally.expect_witness(alink_witness(a, b, c, m), "triple " + std::to_string(a) + "," +
                                                               std::to_string(b) + "," + std::to_string(c));
        }
  const Verdict spot = alink_witness(2, 1, 1, 0);
  tally.expect(spot.witness && spot.witness->image == Polynomial({Rational(4), Rational(-3), Rational(1)}),
               "spot case (2,1,1) image");
  return tally.finish("spot case (2,1,1) gives x^2 - 3x + 4");
}

SuiteResult suite_remark2(const SuiteOptions& opt) {
  Tally tally("remark2", "{rho^i} with 0 < rho < 1 is not a discrete multiplier sequence");
  SearchBudget cfg;
  cfg.max_degree = 4;
  cfg.seed = stream(opt, 40);
  std::string found;
  for (const Rational& rho : {Rational(1, 2), Rational(1, 10), Rational(3, 4)}) {
    const Verdict v = remark2_witness(rho, cfg);
    tally.expect_witness(v, "rho " + to_string(rho));
    if (v.witness) found += (found.empty() ? "" : ", ") + to_string(rho) + ": " + v.note;
  }
  return tally.finish(found);
}

SuiteResult suite_lemma1(const SuiteOptions& opt) {
  Tally tally("lemma1", "no operator with two nonzero coefficients preserves HP");
  SearchBudget cfg;
  cfg.max_degree = 4;
  cfg.seed = stream(opt, 50);
  tally.expect_witness(lemma1_violation(delta(), cfg), "Delta");
  tally.expect_witness(lemma1_violation(FiniteDifferenceOperator::from_constants({1, 1}), cfg),
                       "p(x) + p(x-1)");
  tally.expect_witness(lemma1_violation(w_lambda(1), cfg), "W_1");
  return tally.finish();
}

const std::vector<SuiteEntry>& theorem_suite() {
  static const std::vector<SuiteEntry> entries{
      {"herpou_sufficiency", suite_herpou_sufficiency},
      {"herpou_necessity", suite_herpou_necessity},
      {"fd_riesz", suite_fd_riesz},
      {"riesz", suite_riesz},
      {"dms", suite_dms},
      {"brenti_altn_signs", suite_brenti_altn_signs},
      {"quadratic", suite_quadratic},
      {"alink", suite_alink},
      {"remark2", suite_remark2},
      {"lemma1", suite_lemma1},
  };
  return entries;
}

std::vector<SuiteResult> run_theorem_suite(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  for (const auto& e : theorem_suite()) out.push_back(e.run(opt));
  return out;
}

}  // namespace meshpoly
