#pragma once

// Proper position p << q: real-rooted p and q whose zeros interlace and
// whose Wronskian p q' - p' q is non-negative on the whole real line.

#include "meshpoly/roots.hpp"

#include <optional>
#include <string>

namespace meshpoly {

/// A polynomial together with its squarefree decomposition, so several
/// verdicts on the same polynomial (or its translates) share one analysis.
class RootStructure {
 public:
  explicit RootStructure(Polynomial p);

  const Polynomial& polynomial() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool hyperbolic() const { return hyperbolic_; }
  const SquarefreeDecomposition& decomposition() const { return dec_; }

  /// Structure of p(x - a), obtained by translating the factors.
  RootStructure shifted(const Rational& a) const;

 private:
  RootStructure() = default;

  Polynomial poly_;
  SquarefreeDecomposition dec_;
  bool hyperbolic_ = false;
};

/// p q' - p' q.
Polynomial wronskian(const Polynomial& p, const Polynomial& q);

struct NonnegVerdict {
  bool holds = false;
  std::optional<Rational> negative_at;  // a point where w < 0 when !holds
};

/// w >= 0 on R, decided from the squarefree structure of w.
NonnegVerdict nonneg_on_reals_verdict(const Polynomial& w);
inline bool nonneg_on_reals(const Polynomial& w) { return nonneg_on_reals_verdict(w).holds; }

struct ProperPositionVerdict {
  enum class Failure { None, NotHyperbolic, DegreeGap, InterlaceSlot, WronskianNegative };

  bool holds = false;
  bool interlaces = false;
  bool wronskian_nonneg = false;
  Failure failure = Failure::None;
  /// Which operand (0 = p, 1 = q) for NotHyperbolic; merged root slot for InterlaceSlot.
  std::optional<std::size_t> slot;
  /// A point near the violated slot, or where the Wronskian is negative.
  std::optional<Rational> point;

  std::string describe() const;
};

/// Interlacing of the root multisets (either p first or q first).
/// Both operands must be nonzero and real-rooted.
bool interlaces(const RootStructure& p, const RootStructure& q);

ProperPositionVerdict proper_position(const RootStructure& p, const RootStructure& q);
ProperPositionVerdict proper_position(const Polynomial& p, const Polynomial& q);

/// HP (no mesh bound), HP>=alpha, or HP+>=alpha.
struct ClassSpec {
  std::optional<Rational> mesh_bound;
  bool require_nonneg_roots = false;

  static ClassSpec hp() { return {}; }
  static ClassSpec hp_mesh(const Rational& alpha) { return {alpha, false}; }
  static ClassSpec hp_plus_mesh(const Rational& alpha) { return {alpha, true}; }

  std::string name() const;
  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

/// The zero polynomial belongs to no class.
bool class_membership(const Polynomial& p, const ClassSpec& spec);

/// A x(x-1) - 2 B x + C lies in HP+>=1 iff A C <= B^2 + A B, for A > 0 and
/// B, C >= 0. Throws std::invalid_argument outside that domain.
bool quadratic_hp1plus(const Rational& A, const Rational& B, const Rational& C);

}  // namespace meshpoly
