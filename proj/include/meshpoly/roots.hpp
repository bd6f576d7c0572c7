#pragma once

// Exact real-root machinery: squarefree decomposition, Sturm counting,
// isolation/refinement, hyperbolicity verdicts and the mesh of a
// real-rooted polynomial.

#include "meshpoly/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace meshpoly {

inline const Rational kDefaultTolerance = Rational(1, 1000000000);

class NonHyperbolicInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite rational point or one of +/- infinity.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::NegInf, 0}; }
  static Endpoint pos_inf() { return {Kind::PosInf, 0}; }
  static Endpoint at(const Rational& v) { return {Kind::Finite, v}; }
};

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree, non-constant
  unsigned multiplicity;
};

struct SquarefreeDecomposition {
  Polynomial squarefree_part;  // p / gcd(p, p'), monic
  std::vector<SquarefreeFactor> factors;  // increasing multiplicity, pairwise coprime
};

/// Yun's decomposition. Throws std::invalid_argument on the zero polynomial.
SquarefreeDecomposition squarefree(const Polynomial& p);

/// Sturm chain of a squarefree polynomial, stored with primitive integer
/// coefficients so sign evaluation never normalizes fractions.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& squarefree_poly);

  /// Distinct real roots in (lo, hi].
  std::size_t count(const Endpoint& lo, const Endpoint& hi) const;
  std::size_t count_all() const { return count(Endpoint::neg_inf(), Endpoint::pos_inf()); }

 private:
  std::size_t variations(const Endpoint& at) const;

  std::vector<std::vector<Integer>> chain_;
};

/// Distinct real roots of a squarefree p in (lo, hi].
std::size_t count_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi);

/// A real root located in (lo, hi), or exactly at lo when lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  double approx() const { return to_double((lo + hi) / 2); }
};

struct RootProfile {
  bool is_hyperbolic = false;
  /// Hyperbolic and no root is negative (a root at 0 counts as non-negative).
  bool all_roots_nonnegative = false;
  std::size_t distinct_real_roots = 0;
  bool has_multiple_root = false;
  /// Sorted, pairwise disjoint; one entry per distinct real root.
  std::vector<RootInterval> roots;
};

/// Isolation without refinement. Throws std::invalid_argument on zero.
RootProfile root_profile(const Polynomial& p);

/// Isolates every distinct real root, extracts rational roots exactly, and
/// refines the rest below `tol`.
RootProfile isolate_and_refine(const Polynomial& p, const Rational& tol = kDefaultTolerance);

/// Cheaper verdict when no intervals are needed. False for the zero polynomial.
bool is_hyperbolic(const Polynomial& p);

struct MeshReport {
  Rational lower;
  std::optional<Rational> upper;  // nullopt is +infinity
  std::optional<Rational> exact;  // set when all roots are rational (or mesh is 0)

  bool infinite() const { return !upper.has_value(); }
};

/// Throws NonHyperbolicInput when p is not real-rooted and
/// std::invalid_argument for the zero polynomial.
MeshReport mesh_numeric(const Polynomial& p, const Rational& tol = kDefaultTolerance);

/// Exact closed-condition test "p is real-rooted with mesh >= alpha", via
/// p(x) << p(x - alpha). False for the zero polynomial.
bool mesh_at_least(const Polynomial& p, const Rational& alpha);

namespace detail {

/// Primitive integer multiple of p with positive content, for exact sign tests.
std::vector<Integer> integer_coefficients(const Polynomial& p);
int sign_at(const std::vector<Integer>& c, const Rational& x);
Rational cauchy_bound(const Polynomial& p);

/// Roots of a squarefree polynomial as sorted disjoint intervals whose
/// non-exact endpoints are never roots.
std::vector<RootInterval> isolate_squarefree(const Polynomial& squarefree_poly,
                                             bool extract_rational);
void refine(const std::vector<Integer>& c, RootInterval& root, const Rational& tol);

/// Multiplicity of the root isolated by `root` inside the decomposed polynomial.
unsigned multiplicity_in(const std::vector<SquarefreeFactor>& factors, const RootInterval& root);

}  // namespace detail

}  // namespace meshpoly
