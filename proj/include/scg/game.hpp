#pragma once

#include <map>
#include <utility>

#include "scg/face.hpp"
#include "scg/permutation.hpp"
#include "scg/rational.hpp"
#include "scg/simplicial_complex.hpp"

namespace scg {

/// A characteristic function v : Δ -> Q with v(∅) = 0.
///
/// Stored sparsely: only nonzero values are kept and every other face of the
/// complex reads as 0. Immutable.
class Game {
 public:
  /// The zero game on `complex`.
  explicit Game(ComplexPtr complex);
  /// Zeros are dropped. Throws FaceNotInComplex for keys outside Δ and
  /// EmptyFaceValue for a nonzero value on ∅.
  Game(ComplexPtr complex, const std::map<Face, Rational>& values);

  /// Game with v(S) = fn(S) on every nonempty face.
  template <typename Fn>
  static Game from_function(ComplexPtr complex, Fn&& fn) {
    std::map<Face, Rational> values;
    for (Face s : complex->faces()) {
      if (!s.empty()) values.emplace(s, Rational(fn(s)));
    }
    return Game(std::move(complex), values);
  }

  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }

  /// v(s); 0 for every face not explicitly stored.
  Rational operator()(Face s) const;
  /// Nonzero entries in canonical face order.
  const std::map<Face, Rational>& support() const { return values_; }

  friend bool operator==(const Game& a, const Game& b);

 private:
  ComplexPtr complex_;
  std::map<Face, Rational> values_;
};

/// Whether the games share a complex (same object or equal faces).
bool same_complex(const Game& a, const Game& b);

enum class CarrierKind {
  Containment,        ///< v_T(S) = 1 iff T ⊆ S
  StrictContainment,  ///< v̂_T(S) = 1 iff T ⊊ S
};

/// Throws FaceNotInComplex, or EmptyCarrierNotAllowed for (Containment, ∅).
Game carrier_game(const ComplexPtr& complex, Face t, CarrierKind kind);

/// 1 at T, 0 elsewhere. Throws FaceNotInComplex or EmptyCarrierNotAllowed.
Game indicator_game(const ComplexPtr& complex, Face t);

/// v(S) <= v(T) on every covering pair S ⊂ T, |T| = |S| + 1.
bool is_monotone(const Game& v);

/// v(T ∪ i) = v(T) + v({i}) for every T ∈ Link(i, Δ). Throws
/// VertexNotInComplex.
bool is_dummy(const Game& v, Vertex i);

/// (π·v)(T) = v(πT). Throws PermutationNotSymmetry when π does not map Δ onto
/// itself, DimensionMismatch when π is not a permutation of [n].
Game permute_game(const Game& v, const Permutation& pi);

/// Whether π maps every face of Δ to a face of Δ.
bool preserves(const SimplicialComplex& complex, const Permutation& pi);

/// a·v + b·w. Throws ComplexMismatch.
Game scale_add(const Game& v, const Game& w, const Rational& a, const Rational& b);

inline Game operator+(const Game& v, const Game& w) { return scale_add(v, w, 1, 1); }
inline Game operator-(const Game& v, const Game& w) { return scale_add(v, w, 1, -1); }
inline Game operator*(const Rational& a, const Game& v) { return scale_add(v, v, a, 0); }

}  // namespace scg
