#pragma once

// Univariate polynomials over Q in the monomial basis {x^i} or the
// Pochhammer (falling factorial) basis {(x)_i}, (x)_i = x(x-1)...(x-i+1).

#include "meshpoly/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace meshpoly {

enum class Basis { Monomial, Pochhammer };

/// Polynomial degree with a distinct -infinity for the zero polynomial.
class Degree {
 public:
  static constexpr Degree neg_inf() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : value_(d) {}

  constexpr bool is_neg_inf() const { return !value_.has_value(); }
  /// Precondition: !is_neg_inf().
  constexpr std::size_t value() const { return *value_; }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf())
      return static_cast<int>(!a.is_neg_inf()) <=> static_cast<int>(!b.is_neg_inf());
    return *a.value_ <=> *b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(*a.value_ + *b.value_);
  }

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs, Basis basis = Basis::Monomial);
  Polynomial(std::initializer_list<Rational> coeffs, Basis basis = Basis::Monomial);

  static Polynomial constant(const Rational& c);
  /// The monomial x.
  static Polynomial x();
  /// (x)_i expressed in the Pochhammer basis.
  static Polynomial pochhammer(std::size_t i);

  Basis basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of index i in this polynomial's own basis, zero past the end.
  Rational coeff(std::size_t i) const;

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Leading coefficient in this polynomial's basis (equal in both bases).
  Rational leading() const;

  /// Equality of the monomial-basis forms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void trim();

  std::vector<Rational> coeffs_;
  Basis basis_ = Basis::Monomial;
};

// Conversion between bases, exact via Stirling numbers.
Polynomial convert_basis(const Polynomial& p, Basis target);
inline Polynomial to_monomial(const Polynomial& p) { return convert_basis(p, Basis::Monomial); }
inline Polynomial to_pochhammer(const Polynomial& p) { return convert_basis(p, Basis::Pochhammer); }

/// Signed Stirling numbers of the first kind s(n, k): (x)_n = sum_k s(n,k) x^k.
Integer stirling_first(std::size_t n, std::size_t k);
/// Stirling numbers of the second kind S(n, k): x^n = sum_k S(n,k) (x)_k.
Integer stirling_second(std::size_t n, std::size_t k);

// Arithmetic. Same-basis add/subtract stay in that basis; everything else
// lands in the monomial basis.
Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& c, const Polynomial& p);

enum class CombineKind { Add, Subtract, Multiply, Scale };
/// `scalar` is only read for CombineKind::Scale, which ignores q.
Polynomial combine(const Polynomial& p, const Polynomial& q, CombineKind kind,
                   const Rational& scalar = 1);

Rational evaluate(const Polynomial& p, const Rational& x0);
Polynomial differentiate(const Polynomial& p);

/// p(x - a).
Polynomial shift(const Polynomial& p, const Rational& a);
/// p(c x).
Polynomial scale_argument(const Polynomial& p, const Rational& c);

enum class DifferenceKind { Backward, Forward };
/// Backward: p(x) - p(x-1). Forward: p(x+1) - p(x).
Polynomial difference(const Polynomial& p, DifferenceKind kind);
inline Polynomial backward_difference(const Polynomial& p) {
  return difference(p, DifferenceKind::Backward);
}
inline Polynomial forward_difference(const Polynomial& p) {
  return difference(p, DifferenceKind::Forward);
}

/// lead * prod (x - r_i); an empty root list yields the constant lead.
/// Throws std::invalid_argument when lead == 0.
Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead = 1);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};
/// Euclidean division in Q[x]. Throws std::domain_error on a zero divisor.
DivisionResult divide(const Polynomial& p, const Polynomial& d);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial make_monic(const Polynomial& p);

// alpha_j = sum_i a_i (j)_i relating the falling-factorial expansion
// sum a_i (x)_i Delta^i of a diagonal operator to its eigenvalues.
enum class SequenceDirection { AToAlpha, AlphaToA };
std::vector<Rational> sequence_convert(const std::vector<Rational>& input,
                                       SequenceDirection direction);

}  // namespace meshpoly
