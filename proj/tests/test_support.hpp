#pragma once

// Shared helpers for the unit tests: hand-rolled generators and a few
// brute-force oracles that do not go through the library's fast paths.

#include "meshpoly/polynomial.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace meshpoly::testing {

inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

inline Polynomial P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(Rational(v));
  return Polynomial(std::move(c));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long lo, long hi, long max_den = 4) {
    long den = integer(1, max_den);
    return Q(integer(lo * den, hi * den), den);
  }

  Rational nonzero_rational(long lo, long hi, long max_den = 4) {
    Rational r = 0;
    while (r == 0) r = rational(lo, hi, max_den);
    return r;
  }

  Polynomial polynomial(std::size_t max_degree, long range = 5) {
    std::vector<Rational> c(integer(0, static_cast<long>(max_degree)) + 1);
    for (auto& v : c) v = rational(-range, range);
    return Polynomial(std::move(c));
  }

  /// Sorted roots: first in [lo, hi], then gaps of at least min_gap plus jitter.
  std::vector<Rational> roots(std::size_t n, long lo, long hi, const Rational& min_gap) {
    std::vector<Rational> r;
    if (n == 0) return r;
    r.push_back(rational(lo, hi));
    while (r.size() < n) r.push_back(r.back() + min_gap + rational(0, 2));
    return r;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Naive product expansion, independent of from_roots.
inline std::vector<Rational> expand_roots(const std::vector<Rational>& roots, const Rational& lead) {
  std::vector<Rational> c{lead};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Minimum adjacent gap of a sorted root multiset (0 for repeats).
inline Rational min_gap(std::vector<Rational> roots) {
  std::sort(roots.begin(), roots.end());
  Rational best = roots.at(1) - roots.at(0);
  for (std::size_t i = 1; i + 1 < roots.size(); ++i) best = std::min(best, Rational(roots[i + 1] - roots[i]));
  return best;
}

}  // namespace meshpoly::testing
