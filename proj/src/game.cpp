#include "scg/game.hpp"

#include "scg/error.hpp"

namespace scg {

Game::Game(ComplexPtr complex) : complex_(std::move(complex)) {}

Game::Game(ComplexPtr complex, const std::map<Face, Rational>& values)
    : complex_(std::move(complex)) {
  for (const auto& [face, value] : values) {
    if (!complex_->contains(face)) {
      throw Error(ErrorCode::FaceNotInComplex, "game value on " + face.to_string() + " outside the complex");
    }
    if (value.is_zero()) continue;
    if (face.empty()) throw Error(ErrorCode::EmptyFaceValue, "v(∅) must be 0");
    values_.emplace(face, value);
  }
}

Rational Game::operator()(Face s) const {
  const auto it = values_.find(s);
  return it == values_.end() ? Rational(0) : it->second;
}

bool operator==(const Game& a, const Game& b) {
  return same_complex(a, b) && a.values_ == b.values_;
}

bool same_complex(const Game& a, const Game& b) {
  return a.complex_ptr() == b.complex_ptr() || a.complex() == b.complex();
}

Game carrier_game(const ComplexPtr& complex, Face t, CarrierKind kind) {
  if (!complex->contains(t)) {
    throw Error(ErrorCode::FaceNotInComplex, "carrier face " + t.to_string() + " is not in the complex");
  }
  if (kind == CarrierKind::Containment && t.empty()) {
    throw Error(ErrorCode::EmptyCarrierNotAllowed, "v_T requires T nonempty");
  }
  std::map<Face, Rational> values;
  for (Face s : complex->faces()) {
    if (!t.is_subset_of(s)) continue;
    if (kind == CarrierKind::StrictContainment && s == t) continue;
    values.emplace(s, Rational(1));
  }
  return Game(complex, values);
}

Game indicator_game(const ComplexPtr& complex, Face t) {
  if (!complex->contains(t)) {
    throw Error(ErrorCode::FaceNotInComplex, "indicator face " + t.to_string() + " is not in the complex");
  }
  if (t.empty()) throw Error(ErrorCode::EmptyCarrierNotAllowed, "indicator of ∅ is not a game");
  return Game(complex, {{t, Rational(1)}});
}

bool is_monotone(const Game& v) {
  for (Face t : v.complex().faces()) {
    const Rational vt = v(t);
    for (Vertex j : t.vertices()) {
      if (v(t.without(j)) > vt) return false;
    }
  }
  return true;
}

bool is_dummy(const Game& v, Vertex i) {
  const SimplicialComplex& complex = v.complex();
  if (!complex.is_vertex(i)) {
    throw Error(ErrorCode::VertexNotInComplex, "vertex " + std::to_string(i) + " is not in the complex");
  }
  const Rational vi = v(Face::singleton(i));
  for (Face t : complex.faces()) {
    if (t.contains(i) || !complex.contains(t.with(i))) continue;
    if (v(t.with(i)) != v(t) + vi) return false;
  }
  return true;
}

bool preserves(const SimplicialComplex& complex, const Permutation& pi) {
  if (pi.size() != complex.n()) return false;
  // π is injective on faces, so mapping every facet into Δ forces πΔ = Δ.
  for (Face f : complex.facets()) {
    if (!complex.contains(pi(f))) return false;
  }
  return true;
}

Game permute_game(const Game& v, const Permutation& pi) {
  const SimplicialComplex& complex = v.complex();
  if (pi.size() != complex.n()) {
    throw Error(ErrorCode::DimensionMismatch, "permutation degree differs from n");
  }
  if (!preserves(complex, pi)) {
    throw Error(ErrorCode::PermutationNotSymmetry, pi.to_string() + " does not preserve the complex");
  }
  // (π·v)(S) = v(πS); the value stored at T moves to S = π⁻¹T.
  const Permutation inv = pi.inverse();
  std::map<Face, Rational> values;
  for (const auto& [t, value] : v.support()) values.emplace(inv(t), value);
  return Game(v.complex_ptr(), values);
}

Game scale_add(const Game& v, const Game& w, const Rational& a, const Rational& b) {
  if (!same_complex(v, w)) throw Error(ErrorCode::ComplexMismatch, "games live on different complexes");
  std::map<Face, Rational> values;
  if (!a.is_zero()) {
    for (const auto& [face, value] : v.support()) values[face] += a * value;
  }
  if (!b.is_zero()) {
    for (const auto& [face, value] : w.support()) values[face] += b * value;
  }
  return Game(v.complex_ptr(), values);
}

}  // namespace scg
