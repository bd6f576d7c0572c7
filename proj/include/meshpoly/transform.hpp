#pragma once

// A linear map on polynomials that a check applied to its input. Certificates
// store one so a violation can be recomputed from the input alone.

#include "meshpoly/operators.hpp"

#include <string>
#include <variant>

namespace meshpoly {

namespace transform {
struct Identity {
  friend bool operator==(const Identity&, const Identity&) = default;
};
struct Operator {
  FiniteDifferenceOperator op;
  friend bool operator==(const Operator&, const Operator&) = default;
};
/// p - lambda p'.
struct DerivativeRiesz {
  Rational lambda;
  friend bool operator==(const DerivativeRiesz&, const DerivativeRiesz&) = default;
};
/// (x)_i -> alpha_i (x)_i.
struct Diagonal {
  DiagonalSequence seq;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};
/// x^i -> alpha_i x^i.
struct ClassicalDiagonal {
  DiagonalSequence seq;
  friend bool operator==(const ClassicalDiagonal&, const ClassicalDiagonal&) = default;
};
/// p -> p . q at degree bound d.
struct Bullet {
  Polynomial q;
  std::size_t d = 0;
  friend bool operator==(const Bullet&, const Bullet&) = default;
};
struct Brenti {
  friend bool operator==(const Brenti&, const Brenti&) = default;
};
}  // namespace transform

using Transform = std::variant<transform::Identity, transform::Operator, transform::DerivativeRiesz,
                               transform::Diagonal, transform::ClassicalDiagonal,
                               transform::Bullet, transform::Brenti>;

Polynomial apply_transform(const Transform& t, const Polynomial& p);
/// Short tag used in reports: identity, operator, derivative_riesz, diagonal,
/// classical_diagonal, bullet, brenti.
std::string transform_kind(const Transform& t);

/// x^i -> alpha_i x^i. Throws std::out_of_range when the sequence is too short.
Polynomial classical_diagonal_apply(const DiagonalSequence& A, const Polynomial& p);

}  // namespace meshpoly
