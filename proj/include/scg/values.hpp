#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scg/game.hpp"
#include "scg/probability_table.hpp"
#include "scg/rational.hpp"
#include "scg/simplicial_complex.hpp"

namespace scg {

/// (φ_1(v), ..., φ_n(v)) over the vertices of Δ.
struct GroupValue {
  std::map<Vertex, Rational> values;

  Rational total() const;
  friend bool operator==(const GroupValue&, const GroupValue&) = default;
};

/// a_T over the nonempty faces, with Σ_i φ_i(v) = Σ_T a_T v(T).
struct EfficiencyCoefficients {
  std::map<Face, Rational> coefficients;

  /// Σ_T a_T v(T).
  Rational apply(const Game& v) const;
  friend bool operator==(const EfficiencyCoefficients&, const EfficiencyCoefficients&) = default;
};

/// φ_i(v) = Σ_{T ∈ Link(i)} p_T (v(T ∪ i) - v(T)).
/// Throws PlayerMismatch, KeyOutsideLink, VertexNotInComplex.
Rational probabilistic_value(const Game& v, Vertex i, const ProbabilityTable& table);

/// The Shapley value on a simplicial complex: every coalition size in the
/// link is equally likely, and coalitions of one size are equally likely,
///
///   Shapley_i(v) = 1/(r_i+1) Σ_{T ∈ Link(i)} (v(T ∪ i) - v(T)) / f_{|T|-1}(Link(i)),
///
/// with r_i = rank Link(i). Reduces to the classical value on 2^[n].
/// Throws VertexNotInComplex.
Rational generalized_shapley(const Game& v, Vertex i);

inline constexpr std::size_t kMaxOraclePlayers = 10;

/// Classical Shapley value of i in the game v restricted to 2^players, as the
/// average marginal contribution over all |players|! arrival orders.
/// Deliberately avoids the closed-form weights so it can serve as an oracle.
/// Throws FaceNotInComplex, PlayerNotInFace, TooManyPlayers (> 10 players).
Rational classical_shapley_oracle(const Game& v, Face players, Vertex i);

/// Throws MissingPlayerTable when a vertex has no table.
GroupValue group_value(const Game& v, const TableSet& tables);

/// generalized_shapley for every vertex.
GroupValue shapley_group_value(const Game& v);

/// p^i_T = 1 / ((r_i + 1) f_{|T|-1}(Link(i))) for every vertex i.
TableSet canonical_shapley_tables(const SimplicialComplex& complex);

/// a_T = Σ_{i∈T} p^i_{T∖i} - Σ_{j ∈ Ext(T)} p^j_T (the second sum is empty on
/// facets). Throws MissingPlayerTable.
EfficiencyCoefficients efficiency_coefficients(const SimplicialComplex& complex,
                                               const TableSet& tables);

/// Closed-form coefficients for the Shapley group value on an s-Shapley
/// complex with pure links: 1/s_{r-1} on facets and
/// (1/r)(|T|/s_{|T|-1} - ext(T)/s_{|T|}) on every smaller face.
/// Throws NotPureLinks or NotShapleyComplex.
EfficiencyCoefficients shapley_efficiency_closed_form(const SimplicialComplex& complex);

struct EfficiencyCheck {
  Rational total_value;       ///< Σ_i φ_i(v), computed player by player
  Rational coefficient_side;  ///< Σ_T a_T v(T)
  Rational residual;          ///< total_value - coefficient_side
  bool holds = false;
};

/// Compares Σ_i φ_i(v) with Σ_T a_T v(T) for the coefficients built from
/// `tables`. A nonzero residual is a defect, never an expected outcome.
EfficiencyCheck check_efficiency_identity(const SimplicialComplex& complex, const TableSet& tables,
                                          const Game& v);
/// Same comparison against caller-supplied coefficients.
EfficiencyCheck check_efficiency_identity(const EfficiencyCoefficients& coefficients,
                                          const TableSet& tables, const Game& v);

enum class DecompositionStatus { Exact, Infeasible };

std::string_view to_string(DecompositionStatus s);

/// Attempt to write Shapley_i on Δ as Σ_{F ∋ i} c_F · ClassicalShapley_i(v|_F).
struct Decomposition {
  Vertex player = 0;
  DecompositionStatus status = DecompositionStatus::Infeasible;
  /// Unknowns: facets containing the player, canonical order.
  std::vector<Face> facets;
  /// One equation per coalition T ∈ Link(player), canonical order.
  std::vector<Face> coalitions;
  RationalMatrix matrix;
  RationalVector rhs;
  /// c_F; free parameters fixed to 0. Exact only.
  std::map<Face, Rational> facet_weights;
  /// c̃_{F,t} = c_F (r_i+1) / (|F| C(|F|-1, t)) for t = 0..|F|-1. Exact only.
  std::map<std::pair<Face, std::size_t>, Rational> c_tilde;
  std::size_t free_parameters = 0;
  /// y with y^T matrix = 0 and y^T rhs != 0. Infeasible only.
  std::optional<RationalVector> certificate;
  /// Random games on which the weighted facet sum was compared with
  /// generalized_shapley; 0 when skipped (facets too large for the oracle).
  std::size_t games_checked = 0;
  bool cross_check_passed = false;
};

/// Builds and solves, for every T ∈ Link(i),
///   Σ_{F ∈ Facets(T ∪ i)} c_F |T|!(|F|-|T|-1)! / |F|! = 1 / ((r_i+1) f_{|T|-1}(Link(i))).
/// On Exact, cross-validates on `check_games` seeded random games.
/// Throws VertexNotInComplex.
Decomposition decompose_shapley(const ComplexPtr& complex, Vertex i, std::uint64_t seed = 0,
                                std::size_t check_games = 20);

/// Σ_F c_F · ClassicalShapley_i(v|_F) for an Exact decomposition.
Rational decomposed_value(const Decomposition& d, const Game& v);

struct AxiomCheck {
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  ///< first failure, empty on success
};

struct PlayerAxiomReport {
  Vertex player = 0;
  bool normalized = false;   ///< Σ p_T = 1
  bool probability = false;  ///< normalized and p_T >= 0
  AxiomCheck linearity;
  AxiomCheck star_locality;
  AxiomCheck dummy;
  AxiomCheck monotonicity;

  bool all_passed() const {
    return linearity.passed && star_locality.passed && dummy.passed && monotonicity.passed;
  }
};

struct AxiomReport {
  std::vector<PlayerAxiomReport> players;
  bool all_passed() const;
};

/// Per player: linearity on random pairs, invariance under changes off
/// Star(i), dummy recovery (v_{i} plus random dummy games) and nonnegativity
/// on monotone games (v̂_T, v_T for T ∈ Star(i), plus random monotone games).
/// Throws MissingPlayerTable.
AxiomReport axiom_suite(const ComplexPtr& complex, const TableSet& tables, std::uint64_t seed = 0,
                        std::size_t games_per_check = 10);

}  // namespace scg
