#include "meshpoly/interlace.hpp"

#include <cstdlib>
#include <sstream>

namespace meshpoly {

namespace {

bool squarefree_part_real_rooted(const Polynomial& sq) {
  if (sq.degree() <= Degree(1)) return true;
  return SturmChain(sq).count_all() == sq.degree().value();
}

std::size_t degree_or_zero(const Polynomial& p) { return p.is_zero() ? 0 : p.degree().value(); }

}  // namespace

RootStructure::RootStructure(Polynomial p) : poly_(to_monomial(p)) {
  if (poly_.is_zero()) return;
  dec_ = squarefree(poly_);
  hyperbolic_ = squarefree_part_real_rooted(dec_.squarefree_part);
}

RootStructure RootStructure::shifted(const Rational& a) const {
  RootStructure out;
  out.poly_ = shift(poly_, a);
  out.hyperbolic_ = hyperbolic_;
  if (poly_.is_zero()) return out;
  out.dec_.squarefree_part = shift(dec_.squarefree_part, a);
  for (const auto& f : dec_.factors) out.dec_.factors.push_back({shift(f.factor, a), f.multiplicity});
  return out;
}

Polynomial wronskian(const Polynomial& p, const Polynomial& q) {
  return p * differentiate(q) - differentiate(p) * q;
}

NonnegVerdict nonneg_on_reals_verdict(const Polynomial& w) {
  NonnegVerdict out;
  if (w.is_zero()) {
    out.holds = true;
    return out;
  }
  const auto dec = squarefree(w);
  bool ok = w.leading() > 0 && w.degree().value() % 2 == 0;
  for (const auto& f : dec.factors) {
    if (!ok) break;
    if (f.multiplicity % 2 == 1 && SturmChain(f.factor).count_all() > 0) ok = false;
  }
  if (ok) {
    out.holds = true;
    return out;
  }
  // w has constant sign between consecutive distinct roots; probe one point
  // in each gap.
  const auto roots = detail::isolate_squarefree(dec.squarefree_part, false);
  std::vector<Rational> probes;
  if (roots.empty()) {
    probes.push_back(0);
  } else {
    probes.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      const auto& a = roots[i];
      const auto& b = roots[i + 1];
      probes.push_back(a.hi < b.lo ? Rational((a.hi + b.lo) / 2) : a.hi);
    }
    probes.push_back(roots.back().hi + 1);
  }
  for (const auto& x : probes) {
    if (evaluate(w, x) < 0) {
      out.negative_at = x;
      return out;
    }
  }
  throw std::logic_error("nonneg_on_reals: sign structure and probes disagree");
}

std::string ProperPositionVerdict::describe() const {
  std::ostringstream os;
  switch (failure) {
    case Failure::None: os << (holds ? "holds" : "fails"); break;
    case Failure::NotHyperbolic: os << "operand " << slot.value_or(0) << " is not real-rooted"; break;
    case Failure::DegreeGap: os << "degrees differ by more than one"; break;
    case Failure::InterlaceSlot: os << "zeros fail to interlace at merged root slot " << slot.value_or(0); break;
    case Failure::WronskianNegative: os << "Wronskian is negative"; break;
  }
  if (point) os << " (near x = " << to_string(*point) << ")";
  return os.str();
}

namespace {

struct InterlaceCheck {
  bool holds = false;
  std::optional<std::size_t> slot;
  std::optional<Rational> point;
};

InterlaceCheck check_interlacing(const RootStructure& p, const RootStructure& q) {
  const auto& sp = p.decomposition().squarefree_part;
  const auto& sq = q.decomposition().squarefree_part;
  const Polynomial g = gcd(sp, sq);
  const Polynomial merged = sp * divide(sq, g).quotient;
  const auto roots = detail::isolate_squarefree(merged, false);

  // Weak interlacing with p first means 0 <= N_p(x) - N_q(x) <= 1 for every x,
  // where N counts roots <= x with multiplicity; q first swaps the roles.
  bool p_first = true, q_first = true;
  long np = 0, nq = 0;
  InterlaceCheck out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    np += detail::multiplicity_in(p.decomposition().factors, roots[i]);
    nq += detail::multiplicity_in(q.decomposition().factors, roots[i]);
    const long diff = np - nq;
    if (diff < 0 || diff > 1) p_first = false;
    if (diff > 0 || diff < -1) q_first = false;
    if (!p_first && !q_first) {
      out.slot = i;
      out.point = (roots[i].lo + roots[i].hi) / 2;
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace

bool interlaces(const RootStructure& p, const RootStructure& q) {
  if (p.is_zero() || q.is_zero() || !p.hyperbolic() || !q.hyperbolic())
    throw std::invalid_argument("interlaces: operands must be nonzero and real-rooted");
  return check_interlacing(p, q).holds;
}

ProperPositionVerdict proper_position(const RootStructure& p, const RootStructure& q) {
  using Failure = ProperPositionVerdict::Failure;
  ProperPositionVerdict v;
  auto fail_hyperbolic = [&v](std::size_t which) {
    v.failure = Failure::NotHyperbolic;
    v.slot = which;
    return v;
  };
  // 0 << p and p << 0 for real-rooted p.
  if (p.is_zero() || q.is_zero()) {
    if (!p.is_zero() && !p.hyperbolic()) return fail_hyperbolic(0);
    if (!q.is_zero() && !q.hyperbolic()) return fail_hyperbolic(1);
    v.holds = v.interlaces = v.wronskian_nonneg = true;
    return v;
  }
  if (!p.hyperbolic()) return fail_hyperbolic(0);
  if (!q.hyperbolic()) return fail_hyperbolic(1);

  const std::size_t dp = degree_or_zero(p.polynomial());
  const std::size_t dq = degree_or_zero(q.polynomial());
  if ((dp > dq ? dp - dq : dq - dp) > 1) {
    v.failure = Failure::DegreeGap;
    return v;
  }

  const auto inter = check_interlacing(p, q);
  v.interlaces = inter.holds;
  const auto nonneg = nonneg_on_reals_verdict(wronskian(p.polynomial(), q.polynomial()));
  v.wronskian_nonneg = nonneg.holds;
  v.holds = v.interlaces && v.wronskian_nonneg;
  if (!v.interlaces) {
    v.failure = Failure::InterlaceSlot;
    v.slot = inter.slot;
    v.point = inter.point;
  } else if (!v.wronskian_nonneg) {
    v.failure = Failure::WronskianNegative;
    v.point = nonneg.negative_at;
  }
  return v;
}

ProperPositionVerdict proper_position(const Polynomial& p, const Polynomial& q) {
  return proper_position(RootStructure(p), RootStructure(q));
}

std::string ClassSpec::name() const {
  std::string out = require_nonneg_roots ? "HP+" : "HP";
  if (mesh_bound) out += ">=" + to_string(*mesh_bound);
  return out;
}

bool class_membership(const Polynomial& p, const ClassSpec& spec) {
  if (p.is_zero()) return false;
  const RootStructure s(p);
  if (!s.hyperbolic()) return false;
  if (spec.require_nonneg_roots) {
    const auto& sq = s.decomposition().squarefree_part;
    if (sq.degree() >= Degree(1)) {
      std::size_t negative = SturmChain(sq).count(Endpoint::neg_inf(), Endpoint::at(0));
      if (evaluate(sq, 0) == 0) --negative;
      if (negative > 0) return false;
    }
  }
  if (spec.mesh_bound) {
    if (*spec.mesh_bound < 0) throw std::invalid_argument("class_membership: negative mesh bound");
    if (!proper_position(s, s.shifted(*spec.mesh_bound)).holds) return false;
  }
  return true;
}

bool quadratic_hp1plus(const Rational& A, const Rational& B, const Rational& C) {
  if (A <= 0) throw std::invalid_argument("quadratic_hp1plus: A must be positive");
  if (B < 0 || C < 0) throw std::invalid_argument("quadratic_hp1plus: B and C must be non-negative");
  return A * C <= B * B + A * B;
}

}  // namespace meshpoly
