#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scg/linear_solve.hpp"
#include "scg/permutation.hpp"
#include "scg/probability_table.hpp"
#include "scg/simplicial_complex.hpp"

namespace scg {

/// Symm(Δ) as an explicit element list, sorted by image array.
struct SymmetryGroup {
  int n = 0;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
  /// Identity present, closed under products and inverses. Quadratic in the
  /// order; meant for small groups.
  bool satisfies_group_axioms() const;
};

inline constexpr int kMaxExhaustiveSymmetryN = 10;

/// Every π ∈ S_n with πΔ = Δ, by exhaustive scan. Throws GroundSetTooLarge
/// when n > 10.
SymmetryGroup symm_group(const SimplicialComplex& complex);

enum class GeneratorKind {
  LinkSwap,       ///< π^i_{L,T}: exchanges L and T inside Link(i), fixes i
  Transposition,  ///< (i j) for vertices whose links meet
};

struct PiDeltaGenerator {
  Permutation perm;
  GeneratorKind kind = GeneratorKind::LinkSwap;
  Vertex vertex = 0;  ///< i
  Vertex other = 0;   ///< j, transpositions only
  Face left;          ///< L, link swaps only
  Face right;         ///< T, link swaps only
  /// L ∩ T ≠ ∅: realized by pairing L∖T with T∖L in sorted order.
  bool overlapping = false;

  std::string describe() const;
};

/// Generators of π(Δ), deduplicated by permutation, first occurrence kept.
/// Link swaps come first (by vertex, then L, then T in canonical order),
/// followed by transpositions (i, j), i < j. Every link swap pairs the
/// exchanged vertices in ascending order.
std::vector<PiDeltaGenerator> pi_delta_generators(const SimplicialComplex& complex);

struct ContainmentViolation {
  PiDeltaGenerator generator;
  Face face;   ///< facet of Δ
  Face image;  ///< its image, not in Δ
};

struct ContainmentReport {
  bool contained = true;
  std::size_t generators_checked = 0;
  /// Every failing generator with its first escaping facet.
  std::vector<ContainmentViolation> violations;
};

/// π(Δ) ⊆ Symm(Δ), decided on generators.
ContainmentReport check_pi_delta_contained(const SimplicialComplex& complex);

struct ShapleyClassification {
  bool is_shapley = false;
  /// The common link f-vector (s_0, ..., s_{r-1}).
  std::optional<FVector> s_vector;
  /// Lowest vertex and the first vertex whose link f-vector differs from it.
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::map<Vertex, FVector> link_f_vectors;
};

/// Throws EmptyComplex when Δ has no vertex.
ShapleyClassification classify_shapley(const SimplicialComplex& complex);

struct PSystem {
  /// Distinct link f-vectors as rows, in order of first appearance.
  RationalMatrix matrix;
  RationalVector rhs;
  /// Vertices sharing each row.
  std::vector<std::vector<Vertex>> row_vertices;
  LinearSolution<Rational> solution;
};

/// Solves f(Link(i, Δ)) · p = 1 over all vertices i. Throws NotPureLinks.
PSystem solve_p_system(const SimplicialComplex& complex);

/// p_k = 1 / (r · s_k) for an s-vector of length r.
RationalVector shapley_p_solution(const FVector& s);

struct SymmetryReductionReport {
  struct Violation {
    Vertex player = 0;
    Face coalition;
    Rational weight;
    Vertex reference_player = 0;
    Face reference_coalition;
    Rational reference_weight;
  };

  bool holds = true;
  /// p_t for each nonempty cardinality t seen.
  std::map<std::size_t, Rational> common_weights;
  std::optional<Violation> violation;
};

/// Checks that p^i_T depends only on |T| (T ≠ ∅) across all players.
/// Throws HypothesisNotMet when π(Δ) ⊄ Symm(Δ), MissingPlayerTable when a
/// vertex lacks a table, KeyOutsideLink for keys outside the player's link.
SymmetryReductionReport check_symmetry_reduction(const SimplicialComplex& complex,
                                                 const TableSet& tables);

/// The map Link(i) -> Link(j) induced by (i j): T ↦ T if j ∉ T, else
/// (T ∪ i) ∖ j. Pairs in canonical order of the source face.
std::vector<std::pair<Face, Face>> transposition_link_map(const SimplicialComplex& complex,
                                                          Vertex i, Vertex j);

}  // namespace scg
