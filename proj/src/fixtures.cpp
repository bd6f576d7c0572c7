#include "meshpoly/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace meshpoly {

Rational gen_lead(Rng& rng) {
  static const std::vector<Rational> leads{Rational(1), Rational(2), Rational(3, 2),
                                           Rational(1, 3), Rational(-1), Rational(-5, 2)};
  return rng.pick(leads);
}

std::vector<Rational> gen_fixture_roots(const ClassSpec& spec, std::size_t degree, Rng& rng,
                                        const FixtureOptions& opt) {
  std::vector<Rational> roots;
  if (degree == 0) return roots;
  const Rational lo = spec.require_nonneg_roots ? Rational(0) : Rational(-opt.root_range);
  roots.push_back(rng.rational(lo, opt.root_range, opt.max_den));
  const Rational bound = spec.mesh_bound.value_or(0);
  while (roots.size() < degree) {
    Rational gap = bound;
    if (!rng.chance(1, 4)) gap += rng.rational(0, opt.max_jitter, opt.max_den);
    roots.push_back(roots.back() + gap);
  }
  return roots;
}

Polynomial gen_fixture(const ClassSpec& spec, std::size_t degree, Rng& rng,
                       const FixtureOptions& opt) {
  const auto roots = gen_fixture_roots(spec, degree, rng, opt);
  const Polynomial p = from_roots(roots, gen_lead(rng));
  if (!class_membership(p, spec))
    throw std::logic_error("gen_fixture: generated polynomial is not in " + spec.name());
  return p;
}

Polynomial gen_nonneg_rooted(std::size_t degree, Rng& rng, const FixtureOptions& opt) {
  std::vector<Rational> roots(degree);
  for (auto& r : roots) r = rng.rational(0, opt.root_range, opt.max_den);
  return from_roots(roots, gen_lead(rng));
}

}  // namespace meshpoly
