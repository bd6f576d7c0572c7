#include "meshpoly/roots.hpp"

#include "meshpoly/interlace.hpp"

#include <algorithm>

namespace meshpoly {

SquarefreeDecomposition squarefree(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
  const Polynomial f = make_monic(to_monomial(p));
  const Polynomial df = differentiate(f);
  const Polynomial a0 = gcd(f, df);

  SquarefreeDecomposition out;
  Polynomial b = divide(f, a0).quotient;
  out.squarefree_part = b;
  Polynomial c = divide(df, a0).quotient;
  Polynomial d = c - differentiate(b);
  for (unsigned i = 1; b.degree() > Degree(0); ++i) {
    Polynomial a = gcd(b, d);
    if (a.degree() > Degree(0)) out.factors.push_back({a, i});
    b = divide(b, a).quotient;
    c = divide(d, a).quotient;
    d = c - differentiate(b);
  }
  return out;
}

namespace detail {

std::vector<Integer> integer_coefficients(const Polynomial& p) {
  const auto m = to_monomial(p);
  Integer den_lcm = 1;
  for (const auto& c : m.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(m.coeffs().size());
  Integer content = 0;
  for (const auto& c : m.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

int sign_at(const std::vector<Integer>& c, const Rational& x) {
  if (c.empty()) return 0;
  // sum c_i a^i b^(n-i) for x = a/b, b > 0: same sign as p(x).
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = c.back();
  Integer bpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + c[i] * bpow;
  }
  return sgn(acc);
}

Rational cauchy_bound(const Polynomial& p) {
  const auto m = to_monomial(p);
  Rational best = 0;
  const Rational lead = abs(m.leading());
  for (std::size_t i = 0; i + 1 < m.coeffs().size(); ++i)
    best = std::max(best, Rational(abs(m.coeffs()[i]) / lead));
  return best + 1;
}

namespace {

// A point strictly inside (lo, hi) where the polynomial does not vanish.
Rational nonroot_split(const std::vector<Integer>& c, const Rational& lo, const Rational& hi) {
  const Rational width = hi - lo;
  Rational mid = lo + width / 2;
  for (long k = 3; sign_at(c, mid) == 0; ++k) mid = lo + width / Rational(k);
  return mid;
}

void isolate_recursive(const SturmChain& sturm, const std::vector<Integer>& c, const Rational& lo,
                       const Rational& hi, std::size_t count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi, 1});
    return;
  }
  const Rational mid = nonroot_split(c, lo, hi);
  const std::size_t left = sturm.count(Endpoint::at(lo), Endpoint::at(mid));
  isolate_recursive(sturm, c, lo, mid, left, out);
  isolate_recursive(sturm, c, mid, hi, count - left, out);
}

// Width below which the simplest rational in an isolating interval is the
// only candidate rational root (denominators divide the leading coefficient).
Rational rational_root_resolution(const std::vector<Integer>& c) {
  Integer lead = abs(c.back());
  return Rational(Integer(1), Integer(lead * lead));
}

void extract_rational(const std::vector<Integer>& c, RootInterval& root) {
  const Rational resolution = rational_root_resolution(c);
  int sign_lo = sign_at(c, root.lo);
  while (!root.exact()) {
    Rational candidate = simplest_between(root.lo, root.hi);
    if (candidate != root.lo && candidate != root.hi && sign_at(c, candidate) == 0) {
      root.lo = root.hi = candidate;
      return;
    }
    if (root.width() < resolution) return;
    Rational mid = (root.lo + root.hi) / 2;
    int s = sign_at(c, mid);
    if (s == 0) {
      root.lo = root.hi = mid;
    } else if (s == sign_lo) {
      root.lo = mid;
    } else {
      root.hi = mid;
    }
  }
}

}  // namespace

void refine(const std::vector<Integer>& c, RootInterval& root, const Rational& tol) {
  if (root.exact()) return;
  int sign_lo = sign_at(c, root.lo);
  while (!root.exact() && root.width() > tol) {
    Rational mid = (root.lo + root.hi) / 2;
    int s = sign_at(c, mid);
    if (s == 0) {
      root.lo = root.hi = mid;
    } else if (s == sign_lo) {
      root.lo = mid;
    } else {
      root.hi = mid;
    }
  }
}

std::vector<RootInterval> isolate_squarefree(const Polynomial& squarefree_poly,
                                             bool extract_rational_roots) {
  std::vector<RootInterval> out;
  if (squarefree_poly.degree() < Degree(1)) return out;
  const auto c = integer_coefficients(squarefree_poly);
  if (c.size() == 2) {
    // a x + b: exact root -b/a
    Rational r(-c[0], c[1]);
    r.canonicalize();
    out.push_back({r, r, 1});
    return out;
  }
  SturmChain sturm(squarefree_poly);
  const Rational bound = cauchy_bound(squarefree_poly);
  const std::size_t total = sturm.count(Endpoint::at(-bound), Endpoint::at(bound));
  isolate_recursive(sturm, c, -bound, bound, total, out);
  if (extract_rational_roots)
    for (auto& r : out) extract_rational(c, r);
  return out;
}

unsigned multiplicity_in(const std::vector<SquarefreeFactor>& factors, const RootInterval& root) {
  for (const auto& f : factors) {
    const auto c = integer_coefficients(f.factor);
    if (root.exact()) {
      if (sign_at(c, root.lo) == 0) return f.multiplicity;
    } else if (sign_at(c, root.lo) * sign_at(c, root.hi) < 0) {
      return f.multiplicity;
    }
  }
  return 0;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sturm chains

SturmChain::SturmChain(const Polynomial& squarefree_poly) {
  Polynomial a = to_monomial(squarefree_poly);
  if (a.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  Polynomial b = differentiate(a);
  chain_.push_back(detail::integer_coefficients(a));
  while (!b.is_zero()) {
    chain_.push_back(detail::integer_coefficients(b));
    Polynomial r = divide(a, b).remainder;
    // keep only the sign-relevant scaling: divide by |lead| to tame growth
    if (!r.is_zero()) r = (-1 / abs(r.leading())) * r;
    a = std::move(b);
    b = std::move(r);
  }
}

std::size_t SturmChain::variations(const Endpoint& at) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : chain_) {
    int s;
    if (at.kind == Endpoint::Kind::Finite) {
      s = detail::sign_at(c, at.value);
    } else {
      s = sgn(c.back());
      if (at.kind == Endpoint::Kind::NegInf && (c.size() - 1) % 2 == 1) s = -s;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmChain::count(const Endpoint& lo, const Endpoint& hi) const {
  const std::size_t vlo = variations(lo);
  const std::size_t vhi = variations(hi);
  return vlo > vhi ? vlo - vhi : 0;
}

std::size_t count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == Degree(0)) return 0;
  return SturmChain(p).count(lo, hi);
}

// ---------------------------------------------------------------------------
// Profiles

namespace {

RootProfile build_profile(const Polynomial& p, bool refine_roots, const Rational& tol) {
  if (p.is_zero()) throw std::invalid_argument("root profile of the zero polynomial");
  const auto dec = squarefree(p);
  RootProfile prof;
  prof.roots = detail::isolate_squarefree(dec.squarefree_part, refine_roots);
  prof.distinct_real_roots = prof.roots.size();
  const auto sq_degree = dec.squarefree_part.degree();
  prof.is_hyperbolic = sq_degree.value() == prof.roots.size();
  unsigned total = 0;
  for (auto& r : prof.roots) {
    r.multiplicity = detail::multiplicity_in(dec.factors, r);
    total += r.multiplicity;
    if (r.multiplicity > 1) prof.has_multiple_root = true;
  }
  if (prof.is_hyperbolic && total != p.degree().value())
    throw std::logic_error("root_profile: multiplicities do not add up to the degree");
  // Intervals are sorted, so the leftmost root decides the sign question.
  bool any_negative = false;
  if (!prof.roots.empty()) {
    const auto& first = prof.roots.front();
    if (first.exact() || first.lo >= 0 || first.hi <= 0) {
      any_negative = first.lo < 0;
    } else {
      const auto c = detail::integer_coefficients(dec.squarefree_part);
      const int at_zero = detail::sign_at(c, 0);
      any_negative = at_zero != 0 && at_zero != detail::sign_at(c, first.lo);
    }
  }
  prof.all_roots_nonnegative = prof.is_hyperbolic && !any_negative;
  if (refine_roots) {
    const auto c = detail::integer_coefficients(dec.squarefree_part);
    for (auto& r : prof.roots) detail::refine(c, r, tol);
  }
  return prof;
}

}  // namespace

RootProfile root_profile(const Polynomial& p) { return build_profile(p, false, kDefaultTolerance); }

RootProfile isolate_and_refine(const Polynomial& p, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("isolate_and_refine: tolerance must be positive");
  return build_profile(p, true, tol);
}

bool is_hyperbolic(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= Degree(1)) return true;
  const auto sq = squarefree(p).squarefree_part;
  if (sq.degree() <= Degree(1)) return true;
  return SturmChain(sq).count_all() == sq.degree().value();
}

MeshReport mesh_numeric(const Polynomial& p, const Rational& tol) {
  if (p.is_zero()) throw std::invalid_argument("mesh of the zero polynomial");
  if (tol <= 0) throw std::invalid_argument("mesh_numeric: tolerance must be positive");
  MeshReport report;
  if (p.degree() <= Degree(1)) return report;  // +infinity
  const auto prof = isolate_and_refine(p, tol / 2);
  if (!prof.is_hyperbolic) throw NonHyperbolicInput("mesh of a polynomial that is not real-rooted");
  if (prof.has_multiple_root) {
    report.lower = 0;
    report.upper = Rational(0);
    report.exact = Rational(0);
    return report;
  }
  bool all_exact = true;
  std::optional<Rational> lower, upper;
  for (std::size_t i = 0; i + 1 < prof.roots.size(); ++i) {
    const auto& a = prof.roots[i];
    const auto& b = prof.roots[i + 1];
    Rational gap_lo = b.lo - a.hi;
    Rational gap_hi = b.hi - a.lo;
    if (!lower || gap_lo < *lower) lower = gap_lo;
    if (!upper || gap_hi < *upper) upper = gap_hi;
  }
  for (const auto& r : prof.roots) all_exact = all_exact && r.exact();
  report.lower = std::max(Rational(0), *lower);
  report.upper = *upper;
  if (all_exact) report.exact = *upper;
  return report;
}

bool mesh_at_least(const Polynomial& p, const Rational& alpha) {
  if (alpha < 0) throw std::invalid_argument("mesh_at_least: alpha must be non-negative");
  if (p.is_zero()) return false;
  const RootStructure s(p);
  if (!s.hyperbolic()) return false;
  return proper_position(s, s.shifted(alpha)).holds;
}

}  // namespace meshpoly
