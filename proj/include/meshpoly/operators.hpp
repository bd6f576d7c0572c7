#pragma once

// Finite difference operators T(p)(x) = sum_j q_j(x) p(x - j*step), diagonal
// operators on the Pochhammer basis, and the named maps built on them.

#include "meshpoly/roots.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace meshpoly {

class FiniteDifferenceOperator {
 public:
  FiniteDifferenceOperator() = default;
  /// Coefficient j acts on p(x - j*step). Integer operators use step 1; a
  /// rational step models translates such as p(x) - lambda p(x - alpha).
  explicit FiniteDifferenceOperator(std::vector<Polynomial> coeffs, Rational step = 1);
  static FiniteDifferenceOperator from_constants(const std::vector<Rational>& a, Rational step = 1);

  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Rational& step() const { return step_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool constant_coefficients() const;
  /// Index of the last nonzero coefficient; nullopt for the zero operator.
  std::optional<std::size_t> order() const;
  std::size_t nonzero_terms() const;

  friend bool operator==(const FiniteDifferenceOperator&, const FiniteDifferenceOperator&) = default;

 private:
  std::vector<Polynomial> coeffs_;
  Rational step_ = 1;
};

Polynomial apply(const FiniteDifferenceOperator& T, const Polynomial& p);

/// (A o B)(p) = A(B(p)). Throws std::invalid_argument when the steps differ.
FiniteDifferenceOperator compose(const FiniteDifferenceOperator& A,
                                 const FiniteDifferenceOperator& B);

// Named operators.
FiniteDifferenceOperator delta();                       // p(x) - p(x-1)
FiniteDifferenceOperator nabla_conjugate();             // p(x+1) - p(x), as step -1
FiniteDifferenceOperator riesz(const Rational& lambda, const Rational& alpha);  // p(x) - lambda p(x-alpha)
FiniteDifferenceOperator w_lambda(const Rational& lambda);  // p + lambda x Delta p
FiniteDifferenceOperator euler_xdelta();                 // x Delta p

enum class StandardKind { Delta, NablaConjugate, Riesz, WLambda, EulerXDelta };
/// Throws std::invalid_argument for riesz with alpha < 0.
FiniteDifferenceOperator make_standard(StandardKind kind, const Rational& lambda = 0,
                                       const Rational& alpha = 1);

/// Symbol Q(t) = a_0 + a_1 t + ... + a_k t^k of a constant-coefficient operator.
/// Throws std::invalid_argument for non-constant coefficients.
Polynomial symbol(const FiniteDifferenceOperator& T);
FiniteDifferenceOperator operator_from_symbol(const Polynomial& Q);

/// p - lambda p'.
Polynomial derivative_riesz(const Polynomial& p, const Rational& lambda);

/// The multipliers alpha_i of (x)_i -> alpha_i (x)_i: a finite table or the
/// values phi(i) of a polynomial.
class DiagonalSequence {
 public:
  DiagonalSequence() = default;
  static DiagonalSequence table(std::vector<Rational> values);
  static DiagonalSequence generator(Polynomial phi);
  /// rho^i for i < length.
  static DiagonalSequence geometric(const Rational& rho, std::size_t length);

  /// Throws std::out_of_range past the end of a table.
  Rational operator[](std::size_t i) const;
  /// nullopt when generated by a polynomial (defined everywhere).
  std::optional<std::size_t> length() const;
  bool defined_up_to(std::size_t n) const;
  std::vector<Rational> prefix(std::size_t n) const;

  const std::vector<Rational>& values() const { return values_; }
  const std::optional<Polynomial>& phi() const { return phi_; }

  friend bool operator==(const DiagonalSequence&, const DiagonalSequence&) = default;

 private:
  std::vector<Rational> values_;
  std::optional<Polynomial> phi_;
};

/// Throws std::out_of_range when the sequence is shorter than deg(p) + 1.
Polynomial diagonal_apply(const DiagonalSequence& A, const Polynomial& p);

/// x^i -> (x)_i.
Polynomial brenti_map(const Polynomial& p);

/// (p . q)(x) = sum_{k=0}^{d} (Nabla^k p)(0) (Nabla^(d-k) q)(x).
/// Throws std::invalid_argument when deg p or deg q exceeds d.
Polynomial bullet_product(const Polynomial& p, const Polynomial& q, std::size_t d);

class RootConditionViolated : public std::domain_error {
 public:
  RootConditionViolated(const std::string& what, std::optional<RootInterval> witness)
      : std::domain_error(what), witness_(std::move(witness)) {}
  /// A real root outside the allowed range, when one exists.
  const std::optional<RootInterval>& witness() const { return witness_; }

 private:
  std::optional<RootInterval> witness_;
};

/// {phi(i)}, i < length, for real-rooted phi with all roots <= 0.
/// Throws RootConditionViolated otherwise.
DiagonalSequence sequence_from_poly(const Polynomial& phi, std::size_t length);

/// R_i with T((x)_i) = (x-k)(x-k-1)...(x-i+1) R_i(x), for a
/// constant-coefficient T of order k and i >= k. deg R_i <= k, with
/// equality unless Q(1) = 0.
Polynomial herpou_factor(const FiniteDifferenceOperator& T, std::size_t i);
/// x^k Q((x-1)/x), the limit of R_i(i x) / i^k.
Polynomial herpou_limit(const Polynomial& Q);
/// R(i x) / i^k.
Polynomial herpou_rescaled(const Polynomial& R, std::size_t i, std::size_t k);

}  // namespace meshpoly
