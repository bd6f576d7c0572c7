#include "meshpoly/operators.hpp"

#include <sstream>

namespace meshpoly {

FiniteDifferenceOperator::FiniteDifferenceOperator(std::vector<Polynomial> coeffs, Rational step)
    : coeffs_(std::move(coeffs)), step_(std::move(step)) {
  for (auto& c : coeffs_) c = to_monomial(c);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FiniteDifferenceOperator FiniteDifferenceOperator::from_constants(const std::vector<Rational>& a,
                                                                  Rational step) {
  std::vector<Polynomial> c;
  c.reserve(a.size());
  for (const auto& v : a) c.push_back(Polynomial::constant(v));
  return FiniteDifferenceOperator(std::move(c), std::move(step));
}

bool FiniteDifferenceOperator::constant_coefficients() const {
  for (const auto& c : coeffs_)
    if (c.degree() > Degree(0)) return false;
  return true;
}

std::optional<std::size_t> FiniteDifferenceOperator::order() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t FiniteDifferenceOperator::nonzero_terms() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
  return n;
}

Polynomial apply(const FiniteDifferenceOperator& T, const Polynomial& p) {
  Polynomial out;
  for (std::size_t j = 0; j < T.coeffs().size(); ++j) {
    const auto& q = T.coeffs()[j];
    if (q.is_zero()) continue;
    out = out + q * shift(p, T.step() * Rational(j));
  }
  return to_monomial(out);
}

FiniteDifferenceOperator compose(const FiniteDifferenceOperator& A,
                                 const FiniteDifferenceOperator& B) {
  if (A.is_zero() || B.is_zero()) return {};
  if (A.step() != B.step()) throw std::invalid_argument("compose: operators use different steps");
  // S^j (b_k(x) p(x - k h)) = b_k(x - j h) p(x - (j+k) h)
  const Rational& h = A.step();
  std::vector<Polynomial> out(A.coeffs().size() + B.coeffs().size() - 1);
  for (std::size_t j = 0; j < A.coeffs().size(); ++j)
    for (std::size_t k = 0; k < B.coeffs().size(); ++k)
      out[j + k] = out[j + k] + A.coeffs()[j] * shift(B.coeffs()[k], h * Rational(j));
  return FiniteDifferenceOperator(std::move(out), h);
}

FiniteDifferenceOperator delta() { return FiniteDifferenceOperator::from_constants({1, -1}); }

FiniteDifferenceOperator nabla_conjugate() {
  return FiniteDifferenceOperator::from_constants({-1, 1}, -1);
}

FiniteDifferenceOperator riesz(const Rational& lambda, const Rational& alpha) {
  if (alpha < 0) throw std::invalid_argument("riesz: alpha must be non-negative");
  return FiniteDifferenceOperator::from_constants({1, -lambda}, alpha);
}

FiniteDifferenceOperator w_lambda(const Rational& lambda) {
  return FiniteDifferenceOperator({Polynomial({Rational(1), lambda}), Polynomial({Rational(0), Rational(-lambda)})});
}

FiniteDifferenceOperator euler_xdelta() {
  return FiniteDifferenceOperator({Polynomial::x(), -Polynomial::x()});
}

FiniteDifferenceOperator make_standard(StandardKind kind, const Rational& lambda, const Rational& alpha) {
  switch (kind) {
    case StandardKind::Delta: return delta();
    case StandardKind::NablaConjugate: return nabla_conjugate();
    case StandardKind::Riesz: return riesz(lambda, alpha);
    case StandardKind::WLambda: return w_lambda(lambda);
    case StandardKind::EulerXDelta: return euler_xdelta();
  }
  return {};
}

Polynomial symbol(const FiniteDifferenceOperator& T) {
  if (!T.constant_coefficients())
    throw std::invalid_argument("symbol: operator has non-constant coefficients");
  std::vector<Rational> c;
  for (const auto& q : T.coeffs()) c.push_back(q.coeff(0));
  return Polynomial(std::move(c));
}

FiniteDifferenceOperator operator_from_symbol(const Polynomial& Q) {
  return FiniteDifferenceOperator::from_constants(to_monomial(Q).coeffs());
}

Polynomial derivative_riesz(const Polynomial& p, const Rational& lambda) {
  return to_monomial(p) - lambda * differentiate(p);
}

// ---------------------------------------------------------------------------
// Diagonal sequences

DiagonalSequence DiagonalSequence::table(std::vector<Rational> values) {
  DiagonalSequence s;
  s.values_ = std::move(values);
  return s;
}

DiagonalSequence DiagonalSequence::generator(Polynomial phi) {
  DiagonalSequence s;
  s.phi_ = to_monomial(phi);
  return s;
}

DiagonalSequence DiagonalSequence::geometric(const Rational& rho, std::size_t length) {
  std::vector<Rational> v;
  Rational power = 1;
  for (std::size_t i = 0; i < length; ++i) {
    v.push_back(power);
    power *= rho;
  }
  return table(std::move(v));
}

Rational DiagonalSequence::operator[](std::size_t i) const {
  if (phi_) return evaluate(*phi_, Rational(static_cast<unsigned long>(i)));
  if (i >= values_.size()) throw std::out_of_range("diagonal sequence index past the table");
  return values_[i];
}

std::optional<std::size_t> DiagonalSequence::length() const {
  if (phi_) return std::nullopt;
  return values_.size();
}

bool DiagonalSequence::defined_up_to(std::size_t n) const { return phi_ || n < values_.size(); }

std::vector<Rational> DiagonalSequence::prefix(std::size_t n) const {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back((*this)[i]);
  return out;
}

Polynomial diagonal_apply(const DiagonalSequence& A, const Polynomial& p) {
  if (p.is_zero()) return {};
  const std::size_t n = p.degree().value();
  if (!A.defined_up_to(n)) {
    std::ostringstream os;
    os << "diagonal sequence of length " << A.length().value_or(0)
       << " is too short for a degree " << n << " polynomial";
    throw std::out_of_range(os.str());
  }
  auto c = to_pochhammer(p).coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) c[i] *= A[i];
  return to_monomial(Polynomial(std::move(c), Basis::Pochhammer));
}

Polynomial brenti_map(const Polynomial& p) {
  return to_monomial(Polynomial(to_monomial(p).coeffs(), Basis::Pochhammer));
}

Polynomial bullet_product(const Polynomial& p, const Polynomial& q, std::size_t d) {
  if (p.degree() > Degree(d) || q.degree() > Degree(d))
    throw std::invalid_argument("bullet_product: operand degree exceeds the bound d");
  // nabla_q[m] = Nabla^m q
  std::vector<Polynomial> nabla_q{to_monomial(q)};
  for (std::size_t m = 1; m <= d; ++m) nabla_q.push_back(forward_difference(nabla_q.back()));
  Polynomial out;
  Polynomial nabla_p = to_monomial(p);
  for (std::size_t k = 0; k <= d; ++k) {
    const Rational at0 = evaluate(nabla_p, 0);
    if (at0 != 0) out = out + at0 * nabla_q[d - k];
    nabla_p = forward_difference(nabla_p);
  }
  return out;
}

DiagonalSequence sequence_from_poly(const Polynomial& phi, std::size_t length) {
  if (phi.is_zero()) throw RootConditionViolated("sequence_from_poly: phi is the zero polynomial", std::nullopt);
  const auto prof = root_profile(phi);
  if (!prof.is_hyperbolic)
    throw RootConditionViolated("sequence_from_poly: phi has non-real roots", std::nullopt);
  const auto sq = squarefree(phi).squarefree_part;
  if (sq.degree() >= Degree(1) && SturmChain(sq).count(Endpoint::at(0), Endpoint::pos_inf()) > 0) {
    // roots are sorted, so the largest one is positive
    const auto r = isolate_and_refine(phi, kDefaultTolerance).roots.back();
    throw RootConditionViolated(
        "sequence_from_poly: phi has a positive root near " + std::to_string(r.approx()), r);
  }
  std::vector<Rational> v;
  v.reserve(length);
  for (std::size_t i = 0; i < length; ++i) v.push_back(evaluate(phi, Rational(static_cast<unsigned long>(i))));
  return DiagonalSequence::table(std::move(v));
}

Polynomial herpou_factor(const FiniteDifferenceOperator& T, std::size_t i) {
  if (!T.constant_coefficients()) throw std::invalid_argument("herpou_factor: needs constant coefficients");
  const std::size_t k = T.order().value_or(0);
  if (i < k) throw std::invalid_argument("herpou_factor: index below the operator order");
  const Polynomial image = apply(T, Polynomial::pochhammer(i));
  std::vector<Rational> roots;
  for (std::size_t j = k; j < i; ++j) roots.push_back(Rational(static_cast<unsigned long>(j)));
  auto [quotient, remainder] = divide(image, from_roots(roots));
  if (!remainder.is_zero())
    throw std::logic_error("herpou_factor: T((x)_i) is not divisible by (x-k)...(x-i+1)");
  return quotient;
}

Polynomial herpou_limit(const Polynomial& Q) {
  const auto q = to_monomial(Q);
  if (q.is_zero()) return {};
  const std::size_t k = q.degree().value();
  Polynomial out;
  const Polynomial x_minus_1({Rational(-1), Rational(1)});
  for (std::size_t j = 0; j <= k; ++j) {
    if (q.coeff(j) == 0) continue;
    Polynomial term = Polynomial::constant(q.coeff(j));
    for (std::size_t m = 0; m < j; ++m) term = term * x_minus_1;
    for (std::size_t m = j; m < k; ++m) term = term * Polynomial::x();
    out = out + term;
  }
  return out;
}

Polynomial herpou_rescaled(const Polynomial& R, std::size_t i, std::size_t k) {
  const Rational ii(static_cast<unsigned long>(i));
  return (1 / pow(ii, static_cast<unsigned>(k))) * scale_argument(R, ii);
}

}  // namespace meshpoly
