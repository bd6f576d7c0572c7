#pragma once

// Random test polynomials built from their roots, so class membership holds by
// construction. Each generator re-checks membership before returning.

#include "meshpoly/interlace.hpp"
#include "meshpoly/random.hpp"

namespace meshpoly {

struct FixtureOptions {
  Rational root_range = 5;
  /// Largest extra gap added on top of the class's mesh bound.
  Rational max_jitter = 2;
  long max_den = 4;
};

/// A polynomial of exactly the given degree in `spec`. HP fixtures may repeat
/// roots; bounded classes hit the mesh bound exactly about a quarter of the time.
Polynomial gen_fixture(const ClassSpec& spec, std::size_t degree, Rng& rng,
                       const FixtureOptions& opt = {});

/// Sorted roots behind gen_fixture, for callers that need them.
std::vector<Rational> gen_fixture_roots(const ClassSpec& spec, std::size_t degree, Rng& rng,
                                        const FixtureOptions& opt = {});

/// Leading coefficients used by the generators.
Rational gen_lead(Rng& rng);

/// Roots drawn independently from [0, root_range] (repeats allowed).
Polynomial gen_nonneg_rooted(std::size_t degree, Rng& rng, const FixtureOptions& opt = {});

}  // namespace meshpoly
