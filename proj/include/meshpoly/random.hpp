#pragma once

// Seeded randomness for fixtures and campaigns. Every trial draws from its own
// stream derived from (master seed, trial index), so results do not depend on
// scheduling or on how many trials ran before.

#include "meshpoly/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace meshpoly {

/// One splitmix64 step; advances state.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
    return Rng(derive_seed(master_seed, trial_index));
  }

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  long integer(long lo, long hi);
  /// num/den with den uniform on [1, max_den] and value in [lo, hi].
  Rational rational(const Rational& lo, const Rational& hi, long max_den = 4);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace meshpoly
