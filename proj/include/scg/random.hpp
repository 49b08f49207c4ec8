#pragma once

#include <cstdint>
#include <random>

#include "scg/game.hpp"

namespace scg {

/// Seeded source of small rationals. Uses the raw mt19937_64 stream (whose
/// output is fixed by the standard) so sequences match across toolchains.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// p/q with p in [-max_num, max_num], q in [1, max_den].
  Rational signed_rational(std::int64_t max_num = 12, std::int64_t max_den = 7);
  /// p/q with p in [0, max_num], q in [1, max_den].
  Rational nonnegative_rational(std::int64_t max_num = 12, std::int64_t max_den = 7);

 private:
  std::mt19937_64 engine_;
};

/// Independent random value on every nonempty face.
Game random_game(const ComplexPtr& complex, RationalSampler& rng);

/// Random game in which i is a dummy: values on faces avoiding i are random,
/// and v(T ∪ i) = v(T) + v({i}) for every T ∈ Link(i, Δ).
Game random_dummy_game(const ComplexPtr& complex, Vertex i, RationalSampler& rng);

/// Random monotone game v(S) = Σ_{∅≠T⊆S} m_T with m_T >= 0 (many m_T are 0).
Game random_monotone_game(const ComplexPtr& complex, RationalSampler& rng);

}  // namespace scg
