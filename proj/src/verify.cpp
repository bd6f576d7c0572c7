#include "meshpoly/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace meshpoly {

namespace {

Witness not_in_class(const Polynomial& input, Transform t, Polynomial image, ClassSpec spec,
                     std::string detail) {
  Witness w;
  w.kind = Witness::Kind::NotInClass;
  w.input = to_monomial(input);
  w.transform = std::move(t);
  w.image = std::move(image);
  w.violated = std::move(spec);
  w.detail = std::move(detail);
  return w;
}

Verdict skipped(std::string claim, std::string note) {
  Verdict v;
  v.claim_id = std::move(claim);
  v.status = Status::Skipped;
  v.skipped = 1;
  v.note = std::move(note);
  return v;
}

Rational from_size(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

// (x - s)(x - s - 1)...(x - s - j + 1)
Polynomial shifted_pochhammer(std::size_t j, const Rational& s) {
  std::vector<Rational> roots;
  for (std::size_t l = 0; l < j; ++l) roots.push_back(s + from_size(l));
  return from_roots(roots);
}

// First index breaking (-1)^(n-i) a_i >= 0, for a_n > 0.
std::optional<std::size_t> altn_violation(const Polynomial& p) {
  const auto a = to_pochhammer(p).coeffs();
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i <= n; ++i) {
    const int s = sign(a[i]) * (((n - i) % 2 == 0) ? 1 : -1);
    if (s < 0) return i;
  }
  return std::nullopt;
}

// Merges a sub-verdict of a randomized loop into the running verdict.
// Returns true when the loop should stop.
bool absorb(Verdict& acc, const Verdict& sub) {
  if (sub.status == Status::Skipped) {
    ++acc.skipped;
    return false;
  }
  ++acc.checked;
  if (sub.status == Status::Fails) {
    acc.status = Status::Fails;
    acc.witness = sub.witness;
    acc.note = sub.note;
    return true;
  }
  return false;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

bool replay(const Witness& w) {
  const Polynomial image = apply_transform(w.transform, w.input);
  if (image != w.image) return false;
  switch (w.kind) {
    case Witness::Kind::NotInClass:
      return !image.is_zero() && !class_membership(image, w.violated);
    case Witness::Kind::AlternatingSigns:
      return class_membership(w.input, ClassSpec::hp_plus_mesh(1)) && w.input.leading() > 0 &&
             altn_violation(w.input).has_value();
    case Witness::Kind::ProperPosition:
      return w.partner.has_value() && !proper_position(image, *w.partner).holds;
  }
  return false;
}

// ---------------------------------------------------------------------------

Verdict check_mesh_monotone(const Transform& T, const Polynomial& p, const Rational& alpha) {
  const bool derivative = std::holds_alternative<transform::DerivativeRiesz>(T);
  const std::string claim = derivative ? "riesz" : "fd_riesz";
  if (p.is_zero()) return skipped(claim, "zero input");
  if (derivative ? !is_hyperbolic(p) : !mesh_at_least(p, alpha))
    return skipped(claim, "input outside the hypothesis class");

  Verdict v;
  v.claim_id = claim;
  v.checked = 1;
  v.status = Status::Holds;
  const MeshReport m = mesh_numeric(p);
  if (m.infinite()) {
    v.note = "input mesh is infinite";
    return v;
  }
  const Polynomial image = apply_transform(T, p);
  if (image.is_zero()) {
    v.note = "zero image";
    return v;
  }
  const Rational beta = m.exact ? *m.exact : m.lower;
  if (!m.exact) v.note = "compared against a certified lower bound of the input mesh";
  if (!mesh_at_least(image, beta)) {
    v.status = Status::Fails;
    v.witness = not_in_class(p, T, image, ClassSpec::hp_mesh(beta),
                             "mesh of the image is below the input mesh " + to_string(beta));
  }
  return v;
}

Verdict check_class_preserved(const Transform& T, const Polynomial& p, const ClassSpec& spec,
                              const std::string& claim_id) {
  if (!class_membership(p, spec)) return skipped(claim_id, "input not in " + spec.name());
  Verdict v;
  v.claim_id = claim_id;
  v.checked = 1;
  v.status = Status::Holds;
  const Polynomial image = apply_transform(T, p);
  if (image.is_zero()) {
    v.note = "zero image";
    return v;
  }
  if (!class_membership(image, spec)) {
    v.status = Status::Fails;
    v.witness = not_in_class(p, T, image, spec, "image is not in " + spec.name());
  }
  return v;
}

// ---------------------------------------------------------------------------

HerpouScanResult herpou_scan(const Polynomial& Q, std::size_t i_max) {
  const auto T = operator_from_symbol(Q);
  if (T.is_zero()) throw std::invalid_argument("herpou_scan: zero symbol");
  const std::size_t k = *T.order();
  const Rational lo = Rational(static_cast<long>(k) - 1);
  for (std::size_t i = k; i <= i_max; ++i) {
    const Polynomial R = herpou_factor(T, i);
    if (R.is_zero()) continue;
    std::string reason;
    if (!class_membership(R, ClassSpec::hp_mesh(1))) {
      reason = is_hyperbolic(R) ? "R_i has mesh below 1" : "R_i is not real-rooted";
    } else if (i > k && R.degree() >= Degree(1)) {
      // a root of R_i within distance 1 of one of k, ..., i-1
      const Rational hi = from_size(i);
      const auto sq = squarefree(R).squarefree_part;
      std::size_t inside = SturmChain(sq).count(Endpoint::at(lo), Endpoint::at(hi));
      if (evaluate(R, hi) == 0) --inside;
      if (inside > 0) reason = "R_i has a root in (k-1, i)";
    }
    if (reason.empty()) continue;

    const Polynomial input = to_monomial(Polynomial::pochhammer(i));
    const Polynomial image = apply(T, input);
    if (class_membership(image, ClassSpec::hp_mesh(1)))
      throw std::logic_error("herpou_scan: factor criterion disagrees with the full mesh test");
    std::ostringstream os;
    os << "T((x)_" << i << ") is not in HP>=1: " << reason;
    HerpouScanResult out;
    out.index = i;
    out.witness = not_in_class(input, transform::Operator{T}, image, ClassSpec::hp_mesh(1), os.str());
    return out;
  }
  return {};
}

Verdict herpou_verdict(const Polynomial& Q, const HerpouConfig& cfg) {
  if (Q.is_zero()) throw std::invalid_argument("herpou_verdict: zero symbol");
  Verdict v;
  v.claim_id = "herpou";
  const RootProfile prof = root_profile(Q);
  if (prof.is_hyperbolic && prof.all_roots_nonnegative) {
    const transform::Operator T{operator_from_symbol(Q)};
    v.status = Status::Holds;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = Rng::for_trial(cfg.seed, t);
      const auto deg = static_cast<std::size_t>(rng.integer(0, static_cast<long>(cfg.max_degree)));
      const Polynomial p = gen_fixture(ClassSpec::hp_mesh(1), deg, rng);
      if (absorb(v, check_class_preserved(T, p, ClassSpec::hp_mesh(1), v.claim_id))) break;
    }
    if (v.status == Status::Holds) v.note = "symbol roots real and non-negative; sufficiency self-test";
    return v;
  }
  const auto scan = herpou_scan(Q, cfg.i_max);
  v.checked = cfg.i_max + 1;
  if (scan.witness) {
    v.status = Status::Fails;
    v.witness = scan.witness;
    v.note = "witness index " + std::to_string(*scan.index);
  } else {
    v.status = Status::Inconclusive;
    v.note = "no witness up to i = " + std::to_string(cfg.i_max);
  }
  return v;
}

// ---------------------------------------------------------------------------

Verdict check_altn(const Polynomial& p) {
  if (p.is_zero() || !class_membership(p, ClassSpec::hp_plus_mesh(1)))
    return skipped("altn", "input not in HP+>=1");
  if (p.leading() < 0) return skipped("altn", "negative leading coefficient");
  Verdict v;
  v.claim_id = "altn";
  v.checked = 1;
  v.status = Status::Holds;
  if (const auto i = altn_violation(p)) {
    v.status = Status::Fails;
    Witness w;
    w.kind = Witness::Kind::AlternatingSigns;
    w.input = to_monomial(p);
    w.transform = transform::Identity{};
    w.image = w.input;
    w.violated = ClassSpec::hp_plus_mesh(1);
    w.detail = "Pochhammer coefficient " + std::to_string(*i) + " has the wrong sign";
    v.witness = std::move(w);
  }
  return v;
}

Verdict signs_witness(const std::vector<Rational>& alpha, const Rational& s) {
  if (s <= 0) throw std::invalid_argument("signs_witness: offset must be positive");
  Verdict v;
  v.claim_id = "signs";
  v.checked = 1;
  std::optional<std::size_t> first;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    if (!first) {
      first = j;
      continue;
    }
    if (sign(alpha[j]) == sign(alpha[*first])) continue;
    // (x - s)_j has every Pochhammer coefficient nonzero, so the image breaks
    // the alternating pattern at index `first`.
    const Polynomial p = shifted_pochhammer(j, s);
    std::vector<Rational> table(alpha.begin(), alpha.begin() + static_cast<long>(j) + 1);
    const transform::Diagonal T{DiagonalSequence::table(std::move(table))};
    const Polynomial image = apply_transform(T, p);
    if (class_membership(image, ClassSpec::hp_plus_mesh(1)))
      throw std::logic_error("signs_witness: image unexpectedly in HP+>=1");
    std::ostringstream os;
    os << "alpha_" << *first << " and alpha_" << j << " have opposite signs";
    v.status = Status::Fails;
    v.witness = not_in_class(p, T, image, ClassSpec::hp_plus_mesh(1), os.str());
    v.note = os.str();
    return v;
  }
  v.status = Status::Inconclusive;
  v.note = "nonzero entries share one sign";
  return v;
}

Verdict alink_witness(const Rational& am, const Rational& am1, const Rational& am2, std::size_t m) {
  if (am2 <= 0) throw std::invalid_argument("alink_witness: alpha_(m+2) must be positive");
  Verdict v;
  v.claim_id = "alink";
  v.checked = 1;
  if (am <= am1) {
    v.status = Status::Inconclusive;
    v.note = "alpha_m <= alpha_(m+1): no witness from this family";
    return v;
  }
  // f(a) = a (am1^2 - am am2) + am2 (am1 - am) is negative at a = 0
  const Rational slope = am1 * am1 - am * am2;
  const Rational f0 = am2 * (am1 - am);
  Rational a = 1;
  if (slope > 0) {
    const Rational root = -f0 / slope;
    if (root <= 1) a = root / 2;
  }
  std::vector<Rational> roots;
  for (std::size_t l = 0; l < m; ++l) roots.push_back(from_size(l));
  roots.push_back(from_size(m) + a);
  roots.push_back(from_size(m) + 1 + a);
  const Polynomial p = from_roots(roots);

  std::vector<Rational> table(m, Rational(0));
  table.insert(table.end(), {am, am1, am2});
  const transform::Diagonal T{DiagonalSequence::table(std::move(table))};
  const Polynomial image = apply_transform(T, p);
  if (class_membership(image, ClassSpec::hp_plus_mesh(1)))
    throw std::logic_error("alink_witness: image unexpectedly in HP+>=1");
  v.status = Status::Fails;
  v.witness = not_in_class(p, T, image, ClassSpec::hp_plus_mesh(1),
                           "a = " + to_string(a) + " violates A C <= B^2 + A B");
  v.note = "alpha_m > alpha_(m+1) with alpha_(m+2) > 0";
  return v;
}

// ---------------------------------------------------------------------------

Verdict check_claim2_proof_path(const Rational& lambda, const Polynomial& p) {
  if (lambda < 0) return skipped("claim2_path", "negative lambda");
  if (p.is_zero() || !class_membership(p, ClassSpec::hp_plus_mesh(1)))
    return skipped("claim2_path", "input not in HP+>=1");
  Verdict v;
  v.claim_id = "claim2_path";
  v.checked = 1;
  v.status = Status::Holds;
  const transform::Operator W{w_lambda(lambda)};
  const Polynomial image = apply_transform(W, p);
  for (const auto& partner : {to_monomial(p), shift(p, 1)}) {
    if (proper_position(image, partner).holds) continue;
    Witness w;
    w.kind = Witness::Kind::ProperPosition;
    w.input = to_monomial(p);
    w.transform = W;
    w.image = image;
    w.violated = ClassSpec::hp_plus_mesh(1);
    w.partner = partner;
    w.detail = "W(p) << partner fails";
    v.status = Status::Fails;
    v.witness = std::move(w);
    break;
  }
  return v;
}

Verdict dms_test(const DiagonalSequence& A, const DmsConfig& cfg) {
  if (!A.defined_up_to(cfg.max_degree))
    throw std::out_of_range("dms_test: sequence shorter than max_degree + 1");
  const auto values = A.prefix(cfg.max_degree + 1);
  const ClassSpec spec = ClassSpec::hp_plus_mesh(1);
  const transform::Diagonal T{A};

  Verdict v;
  v.claim_id = "dms";
  const Verdict signs = signs_witness(values);
  if (signs.status == Status::Fails) {
    v.status = Status::Fails;
    v.checked = 1;
    v.witness = signs.witness;
    v.note = signs.note;
    return v;
  }

  // a drop alpha_m > alpha_(m+1) before a positive alpha_(m+2) is certified directly
  for (std::size_t m = 0; m + 2 < values.size(); ++m) {
    const Rational sgn_fix = (std::any_of(values.begin(), values.end(), [](const Rational& a) { return a < 0; }))
                                 ? Rational(-1)
                                 : Rational(1);
    const Rational a0 = sgn_fix * values[m], a1 = sgn_fix * values[m + 1], a2 = sgn_fix * values[m + 2];
    if (a2 <= 0 || a0 <= a1) continue;
    const Verdict drop = alink_witness(a0, a1, a2, m);
    v.status = Status::Fails;
    v.checked = 1;
    v.witness = drop.witness;
    v.witness->transform = T;
    v.witness->image = apply_transform(T, v.witness->input);
    v.note = "alpha_" + std::to_string(m) + " > alpha_" + std::to_string(m + 1) + " before a nonzero entry";
    return v;
  }

  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) nonzero.push_back(i);
  const bool trivial = nonzero.size() <= 2;
  const bool forbidden_trivial = nonzero.size() == 2 && nonzero[1] != nonzero[0] + 1;
  if (forbidden_trivial) {
    // structured candidates first; (x - s)_j has all Pochhammer coefficients nonzero
    for (std::size_t j = nonzero[1]; j <= cfg.max_degree; ++j)
      for (const Rational& s : {Rational(1, 2), Rational(1, 10), Rational(1), Rational(3, 2)})
        if (absorb(v, check_class_preserved(T, shifted_pochhammer(j, s), spec, v.claim_id)))
          return v;
  }

  v.status = Status::Holds;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const auto deg = static_cast<std::size_t>(rng.integer(0, static_cast<long>(cfg.max_degree)));
    const Polynomial p = gen_fixture(spec, deg, rng);
    if (absorb(v, check_class_preserved(T, p, spec, v.claim_id))) return v;
    if (cfg.claim2_lambda) {
      const Verdict path = check_claim2_proof_path(*cfg.claim2_lambda, p);
      if (path.status == Status::Fails) {
        v.status = Status::Fails;
        v.witness = path.witness;
        v.note = "proof-path proper position fails";
        return v;
      }
    }
  }
  if (forbidden_trivial) {
    v.status = Status::Inconclusive;
    v.note = "trivial sequence with non-adjacent entries, but no witness found";
  } else if (trivial) {
    v.note = "trivial sequence of the allowed form";
  }
  return v;
}

// ---------------------------------------------------------------------------

Verdict remark2_witness(const Rational& rho, const SearchBudget& cfg) {
  if (rho <= 0 || rho > 1) throw std::invalid_argument("remark2_witness: rho must lie in (0, 1]");
  Verdict v;
  v.claim_id = "remark2";
  const ClassSpec in = ClassSpec::hp_plus_mesh(1), out = ClassSpec::hp_mesh(1);
  const transform::Diagonal T{DiagonalSequence::geometric(rho, cfg.max_degree + 1)};
  auto test = [&](const Polynomial& p) {
    ++v.checked;
    const Polynomial image = apply_transform(T, p);
    if (image.is_zero() || class_membership(image, out)) return false;
    v.status = Status::Fails;
    v.witness = not_in_class(p, T, image, out, "{rho^i} image is not in HP>=1");
    v.note = "witness of degree " + std::to_string(p.degree().value());
    return true;
  };
  for (std::size_t d = 2; d <= cfg.max_degree; ++d)
    for (const Rational& s : {Rational(1), Rational(0), Rational(1, 2), Rational(2), Rational(3)})
      if (test(shifted_pochhammer(d, s))) return v;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const auto deg = static_cast<std::size_t>(rng.integer(2, static_cast<long>(std::max<std::size_t>(2, cfg.max_degree))));
    if (test(gen_fixture(in, std::min(deg, cfg.max_degree), rng))) return v;
  }
  v.status = Status::Inconclusive;
  v.note = "no witness up to degree " + std::to_string(cfg.max_degree);
  return v;
}

Verdict lemma1_violation(const FiniteDifferenceOperator& T, const SearchBudget& cfg) {
  if (T.nonzero_terms() < 2) return skipped("lemma1", "operator has fewer than two nonzero coefficients");
  Verdict v;
  v.claim_id = "lemma1";
  const transform::Operator op{T};
  auto test = [&](const Polynomial& p) {
    ++v.checked;
    const Polynomial image = apply_transform(op, p);
    if (image.is_zero() || is_hyperbolic(image)) return false;
    v.status = Status::Fails;
    v.witness = not_in_class(p, op, image, ClassSpec::hp(), "image is not real-rooted");
    return true;
  };
  for (std::size_t n = 1; n <= cfg.max_degree; ++n) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    if (test(Polynomial(std::move(c)))) return v;
  }
  FixtureOptions tight;
  tight.max_jitter = Rational(1, 2);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const auto deg = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::max<std::size_t>(1, cfg.max_degree))));
    if (test(gen_fixture(ClassSpec::hp(), deg, rng, tight))) return v;
  }
  v.status = Status::Inconclusive;
  v.note = "no violation up to degree " + std::to_string(cfg.max_degree);
  return v;
}

Verdict classical_multiplier_probe(const DiagonalSequence& A, const ClassicalProbeConfig& cfg) {
  if (!A.defined_up_to(cfg.max_degree))
    throw std::out_of_range("classical_multiplier_probe: sequence shorter than max_degree + 1");
  const auto values = A.prefix(cfg.max_degree + 1);
  if (signs_witness(values).status == Status::Fails)
    return skipped("classical", "sequence fails the structural sign check");
  Verdict v;
  v.claim_id = "classical";
  v.status = Status::Holds;
  const transform::ClassicalDiagonal T{A};
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = Rng::for_trial(cfg.seed, t);
    const auto deg = static_cast<std::size_t>(rng.integer(0, static_cast<long>(cfg.max_degree)));
    const Polynomial p = gen_nonneg_rooted(deg, rng);
    ++v.checked;
    const Polynomial image = apply_transform(T, p);
    if (!image.is_zero() && !is_hyperbolic(image)) {
      v.status = Status::Fails;
      v.witness = not_in_class(p, T, image, ClassSpec::hp(), "classical image is not real-rooted");
      return v;
    }
    if (!cfg.trace_rescaling) continue;
    for (const Rational& rho : {Rational(1), Rational(1, 2), Rational(1, 10)}) {
      // sum gamma_i rho^i alpha_i (y)_i, then y = x / rho
      auto c = to_monomial(p).coeffs();
      Rational power = 1;
      for (std::size_t i = 0; i < c.size(); ++i, power *= rho) c[i] *= power * values[i];
      const Polynomial r = scale_argument(to_monomial(Polynomial(std::move(c), Basis::Pochhammer)), 1 / rho);
      if (r.is_zero() || class_membership(r, ClassSpec::hp_plus_mesh(rho))) continue;
      v.status = Status::Fails;
      v.witness = not_in_class(r, transform::Identity{}, r, ClassSpec::hp_plus_mesh(rho),
                               "rescaled image at rho = " + to_string(rho) + " leaves HP+>=rho");
      return v;
    }
  }
  return v;
}

}  // namespace meshpoly
