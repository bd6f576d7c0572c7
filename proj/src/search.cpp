#include "meshpoly/search.hpp"

#include "meshpoly/suite.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace meshpoly {

namespace {

constexpr std::size_t kFixturesPerOperator = 5;
constexpr std::size_t kDmsTrials = 20;

std::size_t draw_degree(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<long>(lo), static_cast<long>(hi)));
}

Rational nonzero_rational(Rng& rng, const Rational& lo, const Rational& hi, long max_den) {
  for (;;) {
    Rational r = rng.rational(lo, hi, max_den);
    if (r != 0) return r;
  }
}

FixtureOptions fixture_options(const SearchConfig& cfg) {
  FixtureOptions opt;
  opt.root_range = cfg.root_range;
  return opt;
}

// Symbols: random integer coefficients, or mixed-sign rational roots.
Polynomial draw_symbol(Rng& rng, std::size_t max_order) {
  const std::size_t k = draw_degree(rng, 1, std::max<std::size_t>(1, max_order));
  if (rng.chance(1, 2)) {
    std::vector<Rational> c(k + 1);
    for (auto& v : c) v = rng.integer(-3, 3);
    c[0] = nonzero_rational(rng, -3, 3, 1);
    c[k] = nonzero_rational(rng, -3, 3, 1);
    return Polynomial(std::move(c));
  }
  std::vector<Rational> roots(k);
  for (auto& r : roots) r = rng.rational(-3, 3, 3);
  return from_roots(roots, gen_lead(rng));
}

// sum a_j D^j p for the coefficients of the symbol.
Polynomial classical_apply(const Polynomial& Q, const Polynomial& p) {
  Polynomial out, d = p;
  for (std::size_t j = 0; j < Q.coeffs().size() && !d.is_zero(); ++j) {
    out = out + Q.coeff(j) * d;
    d = differentiate(d);
  }
  return out;
}

void finite_degree_trial(const SearchConfig& cfg, Rng& rng, TrialRecord& rec) {
  rec.conjecture = "finitedegreeDif";
  const Polynomial Q = draw_symbol(rng, 3);
  const std::size_t m = draw_degree(rng, 1, cfg.max_degree);
  const auto T = operator_from_symbol(Q);
  const Polynomial head = apply(T, to_monomial(Polynomial::pochhammer(m)));
  rec.inputs = {{"symbol", to_json(Q)}, {"m", m}};
  rec.verdicts["head_image"] = to_json(head);

  const bool hypothesis = !head.is_zero() && class_membership(head, ClassSpec::hp_mesh(1));
  rec.verdicts["head_in_hp1"] = hypothesis;

  // Classical analogue as a sanity baseline: T(x^m) hyperbolic forces
  // preservation of hyperbolic polynomials of degree <= m.
  std::vector<Rational> xm(m + 1);
  xm[m] = 1;
  const Polynomial tm = classical_apply(Q, Polynomial(xm));
  Json baseline = {{"tm_hyperbolic", is_hyperbolic(tm)}, {"checked", 0}, {"status", "skipped"}};
  if (is_hyperbolic(tm)) {
    std::size_t checked = 0;
    bool ok = true;
    for (std::size_t f = 0; f < kFixturesPerOperator; ++f) {
      const Polynomial p = gen_fixture(ClassSpec::hp(), draw_degree(rng, 0, m), rng, fixture_options(cfg));
      const Polynomial img = classical_apply(Q, p);
      ++checked;
      if (!img.is_zero() && !is_hyperbolic(img)) ok = false;
    }
    baseline["checked"] = checked;
    baseline["status"] = ok ? "holds" : "fails";
  }
  rec.verdicts["classical_baseline"] = baseline;

  if (!hypothesis) {
    rec.verdicts["status"] = "skipped";
    return;
  }
  Json fixtures = Json::array();
  for (std::size_t f = 0; f < kFixturesPerOperator; ++f) {
    const Polynomial p =
        gen_fixture(ClassSpec::hp_mesh(1), draw_degree(rng, 0, m), rng, fixture_options(cfg));
    fixtures.push_back(to_json(p));
    const Verdict v = check_class_preserved(transform::Operator{T}, p, ClassSpec::hp_mesh(1), rec.conjecture);
    if (v.status == Status::Fails) {
      rec.certificate = v.witness;
      break;
    }
  }
  rec.inputs["fixtures"] = fixtures;
  rec.verdicts["status"] = rec.certificate ? "fails" : "holds";
}

void bullet_trial(const SearchConfig& cfg, Rng& rng, TrialRecord& rec) {
  rec.conjecture = "finitedegreeDif2";
  const std::size_t d = draw_degree(rng, 1, cfg.max_degree);
  const auto opt = fixture_options(cfg);
  const Polynomial p = gen_fixture(ClassSpec::hp_mesh(1), draw_degree(rng, 0, d), rng, opt);
  const Polynomial q = gen_fixture(ClassSpec::hp_mesh(1), draw_degree(rng, 0, d), rng, opt);
  rec.inputs = {{"p", to_json(p)}, {"q", to_json(q)}, {"d", d}};
  const Verdict v = check_class_preserved(transform::Bullet{q, d}, p, ClassSpec::hp_mesh(1), rec.conjecture);
  rec.verdicts["status"] = status_name(v.status);
  rec.verdicts["image"] = to_json(bullet_product(p, q, d));
  if (v.status == Status::Fails) rec.certificate = v.witness;
}

// Increasing, non-negative classical multiplier sequences.
std::pair<std::string, DiagonalSequence> nice_candidate(Rng& rng, std::size_t length) {
  switch (rng.below(4)) {
    case 0: {
      const std::size_t j = draw_degree(rng, 0, 3);
      return {"(n)_" + std::to_string(j),
              DiagonalSequence::generator(to_monomial(Polynomial::pochhammer(j)))};
    }
    case 1: {
      const Rational rho = rng.pick(std::vector<Rational>{1, Rational(3, 2), 2, 3});
      return {"rho^n, rho = " + to_string(rho), DiagonalSequence::geometric(rho, length)};
    }
    case 2: {
      const Rational lambda = rng.rational(0, 5, 4);
      return {"1 + " + to_string(lambda) + " n",
              sequence_from_poly(Polynomial({Rational(1), lambda}), length)};
    }
    default: {
      std::vector<Rational> roots(draw_degree(rng, 1, 3));
      for (auto& r : roots) r = rng.rational(-4, 0, 3);
      return {"phi(n) with roots <= 0", sequence_from_poly(from_roots(roots), length)};
    }
  }
}

void nice_trial(const SearchConfig& cfg, std::size_t index, Rng& rng, TrialRecord& rec) {
  rec.conjecture = "nice";
  if (index % 2 == 0) {
    const std::size_t max_degree = std::max<std::size_t>(2, cfg.max_degree);
    const auto [name, A] = nice_candidate(rng, max_degree + 1);
    rec.inputs = {{"campaign", "increasing"}, {"candidate", name}, {"sequence", to_json(A)}};
    DmsConfig dcfg;
    dcfg.trials = kDmsTrials;
    dcfg.max_degree = max_degree;
    dcfg.seed = rng.next();
    const Verdict v = dms_test(A, dcfg);
    rec.verdicts["dms"] = to_json(v);
    if (v.status == Status::Fails) rec.certificate = v.witness;
    return;
  }
  // The "only if" direction: a drop before a positive entry is never allowed.
  const std::size_t m = draw_degree(rng, 0, 3);
  const Rational a2 = rng.rational(Rational(1, 4), 5, 4);
  const Rational a1 = rng.rational(0, 4, 4);
  const Rational a0 = a1 + rng.rational(Rational(1, 4), 3, 4);
  rec.inputs = {{"campaign", "non_monotone"},
                {"m", m},
                {"alpha", Json::array({to_json(a0), to_json(a1), to_json(a2)})}};
  const Verdict v = alink_witness(a0, a1, a2, m);
  rec.verdicts["alink"] = to_json(v);
  if (v.status != Status::Fails || !v.witness || !replay(*v.witness)) rec.inconclusive = true;
}

void remark2_trial(const SearchConfig& cfg, Rng& rng, TrialRecord& rec) {
  const Rational rho = rng.rational(Rational(1, 10), Rational(9, 10), 10);
  rec.inputs = {{"rho", to_json(rho)}};
  SearchBudget budget;
  budget.trials = 50;
  budget.max_degree = cfg.max_degree;
  budget.seed = rng.next();
  const Verdict v = remark2_witness(rho, budget);
  rec.verdicts["remark2"] = to_json(v);
  rec.inconclusive = v.status != Status::Fails;
}

void lemma1_trial(const SearchConfig& cfg, Rng& rng, TrialRecord& rec) {
  std::vector<Polynomial> coeffs(draw_degree(rng, 2, 4));
  for (auto& q : coeffs) {
    if (rng.chance(1, 4))
      q = Polynomial({Rational(rng.integer(-2, 2)), nonzero_rational(rng, -2, 2, 1)});
    else
      q = Polynomial::constant(rng.integer(-3, 3));
  }
  coeffs.front() = Polynomial::constant(nonzero_rational(rng, -3, 3, 1));
  coeffs.back() = Polynomial::constant(nonzero_rational(rng, -3, 3, 1));
  const FiniteDifferenceOperator T(std::move(coeffs));
  rec.inputs = {{"operator", to_json(T)}};
  SearchBudget budget;
  budget.trials = 50;
  budget.max_degree = cfg.max_degree;
  budget.seed = rng.next();
  const Verdict v = lemma1_violation(T, budget);
  rec.verdicts["lemma1"] = to_json(v);
  rec.inconclusive = v.status != Status::Fails;
}

void suite_trial(const SearchConfig& cfg, std::size_t index, TrialRecord& rec) {
  const auto& entry = theorem_suite().at(index);
  const SuiteResult r = entry.run(SuiteOptions{cfg.master_seed, cfg.trials});
  rec.inputs = {{"entry", r.id}};
  rec.verdicts = {{"title", r.title}, {"passed", r.passed}, {"checked", r.checked}, {"detail", r.detail}};
  if (r.failure) rec.verdicts["witness"] = to_json(*r.failure);
  rec.inconclusive = !r.passed;
}

std::size_t record_count(const SearchConfig& cfg) {
  return cfg.kind == SearchKind::TheoremSuite ? theorem_suite().size() : cfg.trials;
}

}  // namespace

std::string search_kind_name(SearchKind k) {
  switch (k) {
    case SearchKind::Nice: return "nice";
    case SearchKind::FiniteDegree: return "finite_degree";
    case SearchKind::Bullet: return "bullet";
    case SearchKind::Remark2: return "remark2";
    case SearchKind::Lemma1: return "lemma1";
    case SearchKind::TheoremSuite: return "theorem_suite";
  }
  return "unknown";
}

SearchKind parse_search_kind(const std::string& name) {
  std::string n = name;
  std::replace(n.begin(), n.end(), '-', '_');
  for (SearchKind k : {SearchKind::Nice, SearchKind::FiniteDegree, SearchKind::Bullet, SearchKind::Remark2,
                       SearchKind::Lemma1, SearchKind::TheoremSuite})
    if (search_kind_name(k) == n) return k;
  throw std::invalid_argument("unknown search kind \"" + name + "\"");
}

std::size_t SearchReport::certificates() const {
  return std::count_if(records.begin(), records.end(), [](const TrialRecord& r) { return r.certificate.has_value(); });
}

std::size_t SearchReport::inconclusive() const {
  return std::count_if(records.begin(), records.end(), [](const TrialRecord& r) { return r.inconclusive; });
}

TrialRecord run_trial(const SearchConfig& cfg, std::size_t trial_index) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.trial_index = trial_index;
  Rng rng = Rng::for_trial(cfg.master_seed, trial_index);
  switch (cfg.kind) {
    case SearchKind::FiniteDegree: finite_degree_trial(cfg, rng, rec); break;
    case SearchKind::Bullet: bullet_trial(cfg, rng, rec); break;
    case SearchKind::Nice: nice_trial(cfg, trial_index, rng, rec); break;
    case SearchKind::Remark2: remark2_trial(cfg, rng, rec); break;
    case SearchKind::Lemma1: lemma1_trial(cfg, rng, rec); break;
    case SearchKind::TheoremSuite: suite_trial(cfg, trial_index, rec); break;
  }
  if (cfg.timing)
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SearchReport run_search(const SearchConfig& cfg) {
  SearchReport report{cfg, std::vector<TrialRecord>(record_count(cfg))};
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, report.records.size()));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < report.records.size(); i += jobs) report.records[i] = run_trial(cfg, i);
  };
  if (jobs == 1) {
    work(0);
    return report;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        work(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

Json to_json(const TrialRecord& r) {
  Json j = {{"trial_index", r.trial_index}, {"inputs", r.inputs}, {"verdicts", r.verdicts}};
  if (!r.conjecture.empty()) j["conjecture"] = r.conjecture;
  if (r.certificate) j["certificate"] = certificate_json(r.conjecture, *r.certificate);
  if (r.inconclusive) j["inconclusive"] = true;
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  return j;
}

Json summary_json(const SearchReport& report) {
  const auto& cfg = report.config;
  return {{"summary",
           {{"kind", search_kind_name(cfg.kind)},
            {"seed", cfg.master_seed},
            {"trials", report.records.size()},
            {"max_degree", cfg.max_degree},
            {"root_range", to_json(cfg.root_range)},
            {"i_max", cfg.i_max},
            {"tolerance", to_json(cfg.tolerance)},
            {"certificates", report.certificates()},
            {"inconclusive", report.inconclusive()}}}};
}

void write_jsonl(std::ostream& out, const SearchReport& report) {
  for (const auto& r : report.records) out << dump_line(to_json(r)) << '\n';
  out << dump_line(summary_json(report)) << '\n';
}

void write_csv(std::ostream& out, const SearchReport& report) {
  out << "trial_index,kind,status,conjecture\n";
  const std::string kind = search_kind_name(report.config.kind);
  for (const auto& r : report.records) {
    const char* status = r.certificate ? "certificate" : r.inconclusive ? "inconclusive" : "ok";
    out << r.trial_index << ',' << kind << ',' << status << ',' << r.conjecture << '\n';
  }
}

}  // namespace meshpoly
