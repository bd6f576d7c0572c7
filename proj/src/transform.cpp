#include "meshpoly/transform.hpp"

namespace meshpoly {

namespace {
template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;
}  // namespace

Polynomial classical_diagonal_apply(const DiagonalSequence& A, const Polynomial& p) {
  if (p.is_zero()) return {};
  const auto m = to_monomial(p);
  const std::size_t n = m.degree().value();
  if (!A.defined_up_to(n)) throw std::out_of_range("classical diagonal: sequence too short");
  auto c = m.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) c[i] *= A[i];
  return Polynomial(std::move(c));
}

Polynomial apply_transform(const Transform& t, const Polynomial& p) {
  return std::visit(
      Overloaded{
          [&](const transform::Identity&) { return to_monomial(p); },
          [&](const transform::Operator& o) { return apply(o.op, p); },
          [&](const transform::DerivativeRiesz& d) { return derivative_riesz(p, d.lambda); },
          [&](const transform::Diagonal& d) { return diagonal_apply(d.seq, p); },
          [&](const transform::ClassicalDiagonal& d) { return classical_diagonal_apply(d.seq, p); },
          [&](const transform::Bullet& b) { return bullet_product(p, b.q, b.d); },
          [&](const transform::Brenti&) { return brenti_map(p); },
      },
      t);
}

std::string transform_kind(const Transform& t) {
  static const char* const names[] = {"identity", "operator", "derivative_riesz", "diagonal",
                                      "classical_diagonal", "bullet", "brenti"};
  return names[t.index()];
}

}  // namespace meshpoly
