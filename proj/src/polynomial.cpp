#include "meshpoly/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace meshpoly {

Polynomial::Polynomial(std::vector<Rational> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs, Basis basis)
    : coeffs_(coeffs), basis_(basis) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::pochhammer(std::size_t i) {
  std::vector<Rational> c(i + 1);
  c[i] = 1;
  return Polynomial(std::move(c), Basis::Pochhammer);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  for (auto& c : coeffs_) c.canonicalize();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Degree Polynomial::degree() const {
  return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.basis() == b.basis()) return a.coeffs() == b.coeffs();
  return to_monomial(a).coeffs() == to_monomial(b).coeffs();
}

// ---------------------------------------------------------------------------
// Stirling numbers

namespace {

class StirlingTable {
 public:
  Integer first(std::size_t n, std::size_t k) {
    std::lock_guard lock(mutex_);
    grow(n);
    return k <= n ? first_[n][k] : Integer(0);
  }
  Integer second(std::size_t n, std::size_t k) {
    std::lock_guard lock(mutex_);
    grow(n);
    return k <= n ? second_[n][k] : Integer(0);
  }
  std::vector<Integer> first_row(std::size_t n) {
    std::lock_guard lock(mutex_);
    grow(n);
    return first_[n];
  }
  std::vector<Integer> second_row(std::size_t n) {
    std::lock_guard lock(mutex_);
    grow(n);
    return second_[n];
  }

 private:
  // s(n+1,k) = s(n,k-1) - n s(n,k);  S(n+1,k) = S(n,k-1) + k S(n,k)
  void grow(std::size_t n) {
    if (first_.empty()) {
      first_.push_back({Integer(1)});
      second_.push_back({Integer(1)});
    }
    while (first_.size() <= n) {
      const std::size_t m = first_.size() - 1;
      const auto& f = first_.back();
      const auto& s = second_.back();
      std::vector<Integer> nf(m + 2, 0), ns(m + 2, 0);
      for (std::size_t k = 1; k <= m + 1; ++k) {
        nf[k] = f[k - 1] - (k <= m ? Integer(f[k] * m) : Integer(0));
        ns[k] = s[k - 1] + (k <= m ? Integer(s[k] * k) : Integer(0));
      }
      first_.push_back(std::move(nf));
      second_.push_back(std::move(ns));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> first_;
  std::vector<std::vector<Integer>> second_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

std::vector<Rational> padded(const std::vector<Rational>& c, std::size_t n) {
  std::vector<Rational> out = c;
  if (out.size() < n) out.resize(n, Rational(0));
  return out;
}

}  // namespace

Integer stirling_first(std::size_t n, std::size_t k) { return stirling_table().first(n, k); }
Integer stirling_second(std::size_t n, std::size_t k) { return stirling_table().second(n, k); }

Polynomial convert_basis(const Polynomial& p, Basis target) {
  if (p.basis() == target) return p;
  const auto& c = p.coeffs();
  std::vector<Rational> out(c.size(), Rational(0));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    auto row = target == Basis::Monomial ? stirling_table().first_row(n)
                                         : stirling_table().second_row(n);
    for (std::size_t k = 0; k <= n; ++k)
      if (row[k] != 0) out[k] += c[n] * Rational(row[k]);
  }
  return Polynomial(std::move(out), target);
}

// ---------------------------------------------------------------------------
// Arithmetic

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  if (p.basis() != q.basis()) return to_monomial(p) + to_monomial(q);
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  std::vector<Rational> out = padded(p.coeffs(), n);
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) out[i] += q.coeffs()[i];
  return Polynomial(std::move(out), p.basis());
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> out = p.coeffs();
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out), p.basis());
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  const auto a = to_monomial(p);
  const auto b = to_monomial(q);
  std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs();
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out), p.basis());
}

Polynomial combine(const Polynomial& p, const Polynomial& q, CombineKind kind,
                   const Rational& scalar) {
  switch (kind) {
    case CombineKind::Add: return p + q;
    case CombineKind::Subtract: return p - q;
    case CombineKind::Multiply: return p * q;
    case CombineKind::Scale: return scalar * p;
  }
  return p;
}

Rational evaluate(const Polynomial& p, const Rational& x0) {
  const auto m = to_monomial(p);
  Rational acc = 0;
  for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

Polynomial differentiate(const Polynomial& p) {
  const auto m = to_monomial(p);
  if (m.coeffs().size() <= 1) return Polynomial();
  std::vector<Rational> out(m.coeffs().size() - 1);
  for (std::size_t i = 1; i < m.coeffs().size(); ++i) out[i - 1] = m.coeffs()[i] * Rational(i);
  return Polynomial(std::move(out));
}

Polynomial shift(const Polynomial& p, const Rational& a) {
  const auto m = to_monomial(p);
  if (a == 0 || m.coeffs().size() <= 1) return m;
  // Horner in the variable (x - a): r <- r (x - a) + c_i.
  std::vector<Rational> r;
  r.reserve(m.coeffs().size());
  for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it) {
    r.push_back(Rational(0));
    for (std::size_t k = r.size() - 1; k > 0; --k) r[k] = r[k - 1] - a * r[k];
    r[0] = *it - a * r[0];
  }
  return Polynomial(std::move(r));
}

Polynomial scale_argument(const Polynomial& p, const Rational& c) {
  auto m = to_monomial(p);
  std::vector<Rational> out = m.coeffs();
  Rational power = 1;
  for (auto& v : out) {
    v *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial difference(const Polynomial& p, DifferenceKind kind) {
  if (kind == DifferenceKind::Backward) return to_monomial(p) - shift(p, 1);
  return shift(p, -1) - to_monomial(p);
}

Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  if (lead == 0) throw std::invalid_argument("from_roots: leading coefficient must be nonzero");
  std::vector<Rational> c{lead};
  for (const auto& r : roots) {
    c.push_back(Rational(0));
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

DivisionResult divide(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  auto rem = to_monomial(p).coeffs();
  const auto dm = to_monomial(d);
  const auto& dc = dm.coeffs();
  const std::size_t dd = dc.size() - 1;
  if (rem.size() < dc.size()) return {Polynomial(), Polynomial(std::move(rem))};
  std::vector<Rational> quot(rem.size() - dd, Rational(0));
  const Rational inv_lead = 1 / dc.back();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] * inv_lead;
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * dc[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return (1 / p.leading()) * to_monomial(p);
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  Polynomial a = to_monomial(p);
  Polynomial b = to_monomial(q);
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

std::vector<Rational> sequence_convert(const std::vector<Rational>& input,
                                       SequenceDirection direction) {
  const std::size_t n = input.size();
  // falling[j][i] = (j)_i for i <= j
  std::vector<std::vector<Rational>> falling(n);
  for (std::size_t j = 0; j < n; ++j) {
    falling[j].resize(j + 1);
    falling[j][0] = 1;
    for (std::size_t i = 1; i <= j; ++i) falling[j][i] = falling[j][i - 1] * Rational(j - i + 1);
  }
  std::vector<Rational> out(n, Rational(0));
  if (direction == SequenceDirection::AToAlpha) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) out[j] += input[i] * falling[j][i];
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = input[j];
      for (std::size_t i = 0; i < j; ++i) acc -= out[i] * falling[j][i];
      out[j] = acc / falling[j][j];
    }
  }
  return out;
}

}  // namespace meshpoly
