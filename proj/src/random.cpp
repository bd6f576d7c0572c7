#include "meshpoly/random.hpp"

#include <stdexcept>

namespace meshpoly {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::uint64_t s = master_seed;
  const std::uint64_t a = splitmix64(s);
  std::uint64_t t = a ^ trial_index;
  splitmix64(t);
  return splitmix64(t);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return v % n;
}

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::integer: empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational(const Rational& lo, const Rational& hi, long max_den) {
  const long den = integer(1, max_den);
  const Integer first = ceil(lo * den), last = floor(hi * den);
  if (last < first) return lo;
  const Integer span = last - first;
  const long k = integer(0, span.get_si());
  Rational r(first + k, den);
  r.canonicalize();
  return r;
}

}  // namespace meshpoly
