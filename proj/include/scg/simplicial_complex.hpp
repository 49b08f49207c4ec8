#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "scg/face.hpp"

namespace scg {

/// Face counts by cardinality: entries[k] = f_{k-1}, the number of faces with
/// k vertices, for k = 0..rank.
struct FVector {
  std::vector<std::uint64_t> entries;

  std::size_t size() const { return entries.size(); }
  std::uint64_t operator[](std::size_t cardinality) const { return entries.at(cardinality); }
  /// f_{k-1}, or 0 past the end.
  std::uint64_t count(std::size_t cardinality) const {
    return cardinality < entries.size() ? entries[cardinality] : 0;
  }
  std::uint64_t total() const;
  /// "(1,5,7,3)"
  std::string to_string() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

std::ostream& operator<<(std::ostream& os, const FVector& f);

/// A finite simplicial complex over the ground set [n], n <= 64.
///
/// The full face set is materialized at construction and kept in canonical
/// order (cardinality, then lexicographic). Immutable.
class SimplicialComplex {
 public:
  /// The empty complex on [0].
  SimplicialComplex() = default;

  /// Downward closure of `facets`. Redundant inputs are absorbed. An empty
  /// list yields the empty complex (no faces at all).
  /// Throws TooManyVertices (n > 64) or VertexOutOfRange (id > n).
  static SimplicialComplex from_facets(int n, std::span<const Face> facets);
  static SimplicialComplex from_facets(int n, std::initializer_list<Face> facets);

  /// Adopts an already downward-closed family. Throws NotDownwardClosed
  /// otherwise.
  static SimplicialComplex from_faces(int n, std::vector<Face> faces);

  int n() const { return n_; }
  bool empty() const { return faces_.empty(); }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t rank() const { return rank_; }
  std::size_t face_count() const { return faces_.size(); }

  bool contains(Face f) const { return index_.contains(f); }
  bool is_facet(Face f) const;
  /// Ids i in [n] with {i} a face.
  std::vector<Vertex> vertices() const;
  bool is_vertex(Vertex v) const;

  /// Same ground set and the same faces.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(int n, std::vector<Face> closed_faces);

  int n_ = 0;
  std::vector<Face> faces_;
  std::vector<Face> facets_;
  std::unordered_set<Face> index_;
  std::size_t rank_ = 0;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex c) {
  return std::make_shared<const SimplicialComplex>(std::move(c));
}

/// {T : T ∩ S = ∅, T ∪ S ∈ Δ} on the same ground set. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& complex, Face s);
SimplicialComplex link(const SimplicialComplex& complex, Vertex i);

/// All A ⊆ T for some T ∈ Δ with S ⊆ T, canonical order. Throws
/// FaceNotInComplex.
std::vector<Face> star(const SimplicialComplex& complex, Face s);

/// Throws EmptyComplex.
FVector f_vector(const SimplicialComplex& complex);

/// {S ∈ Δ : |S| <= k}.
SimplicialComplex skeleton(const SimplicialComplex& complex, std::size_t k);

/// Every vertex link is pure of rank rank(Δ) - 1. Throws EmptyComplex when Δ
/// has no vertex.
bool has_pure_links(const SimplicialComplex& complex);

/// {j ∉ T : T ∪ j ∈ Δ}, ascending. Throws FaceNotInComplex.
std::vector<Vertex> extension_set(const SimplicialComplex& complex, Face t);

/// Facets F ⊇ S in canonical order. Throws FaceNotInComplex.
std::vector<Face> facets_containing(const SimplicialComplex& complex, Face s);

/// 2^[n].
SimplicialComplex full_simplex(int n);
/// ∂(2^[n]): every proper subset of [n].
SimplicialComplex simplex_boundary(int n);
/// The n-cycle 1-2-...-n-1 as a graph.
SimplicialComplex cycle_graph(int n);

}  // namespace scg
