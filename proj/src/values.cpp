#include "scg/values.hpp"

#include <algorithm>
#include <unordered_map>

#include "scg/error.hpp"
#include "scg/linear_solve.hpp"
#include "scg/random.hpp"
#include "scg/symmetry.hpp"

namespace scg {

namespace {

void require_vertex(const SimplicialComplex& complex, Vertex i) {
  if (!complex.is_vertex(i)) {
    throw Error(ErrorCode::VertexNotInComplex, "vertex " + std::to_string(i) + " is not in the complex");
  }
}

const ProbabilityTable& table_for(const TableSet& tables, Vertex i) {
  const auto it = tables.find(i);
  if (it == tables.end()) {
    throw Error(ErrorCode::MissingPlayerTable, "no probability table for player " + std::to_string(i));
  }
  return it->second;
}

Rational marginal(const Game& v, Face t, Vertex i) { return v(t.with(i)) - v(t); }

}  // namespace

Rational GroupValue::total() const {
  Rational sum;
  for (const auto& [i, value] : values) sum += value;
  return sum;
}

Rational EfficiencyCoefficients::apply(const Game& v) const {
  Rational sum;
  for (const auto& [t, a] : coefficients) sum += a * v(t);
  return sum;
}

Rational probabilistic_value(const Game& v, Vertex i, const ProbabilityTable& table) {
  const SimplicialComplex& complex = v.complex();
  require_vertex(complex, i);
  if (table.player() != i) {
    throw Error(ErrorCode::PlayerMismatch, "table for player " + std::to_string(table.player()) +
                                               " used for player " + std::to_string(i));
  }
  Rational sum;
  for (const auto& [t, p] : table.weights()) {
    if (t.contains(i) || !complex.contains(t.with(i))) {
      throw Error(ErrorCode::KeyOutsideLink,
                  "coalition " + t.to_string() + " is not in Link(" + std::to_string(i) + ")");
    }
    if (!p.is_zero()) sum += p * marginal(v, t, i);
  }
  return sum;
}

Rational generalized_shapley(const Game& v, Vertex i) {
  const SimplicialComplex& complex = v.complex();
  require_vertex(complex, i);
  const SimplicialComplex lk = link(complex, i);
  const FVector f = f_vector(lk);
  Rational sum;
  for (Face t : lk.faces()) {
    const Rational m = marginal(v, t, i);
    if (!m.is_zero()) sum += m / Rational(f[t.size()]);
  }
  return sum / Rational(lk.rank() + 1);
}

Rational classical_shapley_oracle(const Game& v, Face players, Vertex i) {
  if (!v.complex().contains(players)) {
    throw Error(ErrorCode::FaceNotInComplex, "player set " + players.to_string() + " is not a face");
  }
  if (!players.contains(i)) {
    throw Error(ErrorCode::PlayerNotInFace, "player " + std::to_string(i) + " not in " + players.to_string());
  }
  if (players.size() > kMaxOraclePlayers) {
    throw Error(ErrorCode::TooManyPlayers, "permutation oracle limited to 10 players");
  }
  // Walk every arrival order and tally the coalition found in front of i.
  std::vector<Vertex> order = players.vertices();
  std::unordered_map<Face, std::uint64_t> predecessors;
  std::uint64_t orders = 0;
  do {
    Face before;
    for (Vertex p : order) {
      if (p == i) break;
      before = before.with(p);
    }
    ++predecessors[before];
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<std::pair<Face, std::uint64_t>> tally(predecessors.begin(), predecessors.end());
  std::sort(tally.begin(), tally.end());
  Rational sum;
  for (const auto& [before, count] : tally) sum += Rational(count) * marginal(v, before, i);
  return sum / Rational(orders);
}

GroupValue group_value(const Game& v, const TableSet& tables) {
  GroupValue out;
  for (Vertex i : v.complex().vertices()) {
    out.values.emplace(i, probabilistic_value(v, i, table_for(tables, i)));
  }
  return out;
}

GroupValue shapley_group_value(const Game& v) {
  GroupValue out;
  for (Vertex i : v.complex().vertices()) out.values.emplace(i, generalized_shapley(v, i));
  return out;
}

TableSet canonical_shapley_tables(const SimplicialComplex& complex) {
  TableSet tables;
  for (Vertex i : complex.vertices()) {
    const SimplicialComplex lk = link(complex, i);
    const FVector f = f_vector(lk);
    const Rational sizes(lk.rank() + 1);
    std::map<Face, Rational> weights;
    for (Face t : lk.faces()) weights.emplace(t, Rational(1) / (sizes * Rational(f[t.size()])));
    tables.emplace(i, ProbabilityTable(i, std::move(weights)));
  }
  return tables;
}

EfficiencyCoefficients efficiency_coefficients(const SimplicialComplex& complex,
                                               const TableSet& tables) {
  for (Vertex i : complex.vertices()) table_for(tables, i);
  EfficiencyCoefficients out;
  for (Face t : complex.faces()) {
    if (t.empty()) continue;
    Rational a;
    for (Vertex i : t.vertices()) a += tables.at(i).weight(t.without(i));
    for (Vertex j : extension_set(complex, t)) a -= tables.at(j).weight(t);
    out.coefficients.emplace(t, a);
  }
  return out;
}

EfficiencyCoefficients shapley_efficiency_closed_form(const SimplicialComplex& complex) {
  if (!has_pure_links(complex)) {
    throw Error(ErrorCode::NotPureLinks, "closed-form efficiency needs pure links");
  }
  const ShapleyClassification cls = classify_shapley(complex);
  if (!cls.is_shapley) {
    throw Error(ErrorCode::NotShapleyComplex, "vertex links have different f-vectors");
  }
  const FVector& s = *cls.s_vector;
  const std::size_t r = complex.rank();
  const Rational inv_r = Rational(1) / Rational(r);
  EfficiencyCoefficients out;
  for (Face t : complex.faces()) {
    if (t.empty()) continue;
    if (complex.is_facet(t)) {
      out.coefficients.emplace(t, Rational(1) / Rational(s[r - 1]));
      continue;
    }
    const std::size_t k = t.size();
    const Rational ext(extension_set(complex, t).size());
    const Rational a = inv_r * (Rational(k) / Rational(s[k - 1]) - ext / Rational(s[k]));
    out.coefficients.emplace(t, a);
  }
  return out;
}

EfficiencyCheck check_efficiency_identity(const EfficiencyCoefficients& coefficients,
                                          const TableSet& tables, const Game& v) {
  EfficiencyCheck out;
  out.total_value = group_value(v, tables).total();
  out.coefficient_side = coefficients.apply(v);
  out.residual = out.total_value - out.coefficient_side;
  out.holds = out.residual.is_zero();
  return out;
}

EfficiencyCheck check_efficiency_identity(const SimplicialComplex& complex, const TableSet& tables,
                                          const Game& v) {
  return check_efficiency_identity(efficiency_coefficients(complex, tables), tables, v);
}

std::string_view to_string(DecompositionStatus s) {
  return s == DecompositionStatus::Exact ? "Exact" : "Infeasible";
}

Decomposition decompose_shapley(const ComplexPtr& complex, Vertex i, std::uint64_t seed,
                                std::size_t check_games) {
  require_vertex(*complex, i);
  Decomposition out;
  out.player = i;
  out.facets = facets_containing(*complex, Face::singleton(i));
  const SimplicialComplex lk = link(*complex, i);
  out.coalitions = lk.faces();
  const FVector f = f_vector(lk);
  const Rational sizes(lk.rank() + 1);

  const auto rows = static_cast<Eigen::Index>(out.coalitions.size());
  const auto cols = static_cast<Eigen::Index>(out.facets.size());
  out.matrix = RationalMatrix::Zero(rows, cols);
  out.rhs = RationalVector(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Face t = out.coalitions[static_cast<std::size_t>(r)];
    const std::size_t k = t.size();
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Face facet = out.facets[static_cast<std::size_t>(c)];
      if (!t.is_subset_of(facet)) continue;
      const std::size_t m = facet.size();
      out.matrix(r, c) = factorial(k) * factorial(m - k - 1) / factorial(m);
    }
    out.rhs(r) = Rational(1) / (sizes * Rational(f[k]));
  }

  const LinearSolution<Rational> sol = solve_exact(out.matrix, out.rhs);
  if (sol.status == SolveStatus::Inconsistent) {
    out.status = DecompositionStatus::Infeasible;
    out.certificate = sol.certificate;
    return out;
  }
  out.status = DecompositionStatus::Exact;
  out.free_parameters = sol.nullspace_basis.size();
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Face facet = out.facets[static_cast<std::size_t>(c)];
    const Rational& weight = (*sol.particular)(c);
    out.facet_weights.emplace(facet, weight);
    for (std::size_t t = 0; t < facet.size(); ++t) {
      out.c_tilde.emplace(std::make_pair(facet, t),
                          weight * sizes / (Rational(facet.size()) * binomial(facet.size() - 1, t)));
    }
  }

  const bool oracle_fits = std::all_of(out.facets.begin(), out.facets.end(),
                                       [](Face facet) { return facet.size() <= kMaxOraclePlayers; });
  if (!oracle_fits) return out;
  RationalSampler rng(seed);
  out.cross_check_passed = true;
  for (std::size_t g = 0; g < check_games; ++g) {
    const Game v = random_game(complex, rng);
    ++out.games_checked;
    if (decomposed_value(out, v) != generalized_shapley(v, i)) {
      out.cross_check_passed = false;
      break;
    }
  }
  return out;
}

Rational decomposed_value(const Decomposition& d, const Game& v) {
  Rational sum;
  for (const auto& [facet, weight] : d.facet_weights) {
    if (!weight.is_zero()) sum += weight * classical_shapley_oracle(v, facet, d.player);
  }
  return sum;
}

bool AxiomReport::all_passed() const {
  return std::all_of(players.begin(), players.end(),
                     [](const PlayerAxiomReport& p) { return p.all_passed(); });
}

namespace {

void record(AxiomCheck& check, bool ok, const std::string& what) {
  ++check.cases;
  if (!ok && check.passed) {
    check.passed = false;
    check.detail = what;
  }
}

}  // namespace

AxiomReport axiom_suite(const ComplexPtr& complex, const TableSet& tables, std::uint64_t seed,
                        std::size_t games_per_check) {
  AxiomReport report;
  RationalSampler rng(seed);
  for (Vertex i : complex->vertices()) {
    const ProbabilityTable& table = table_for(tables, i);
    PlayerAxiomReport pr;
    pr.player = i;
    pr.normalized = table.is_normalized();
    pr.probability = table.is_probability();
    const auto phi = [&](const Game& v) { return probabilistic_value(v, i, table); };

    for (std::size_t g = 0; g < games_per_check; ++g) {
      const Game v = random_game(complex, rng);
      const Game w = random_game(complex, rng);
      const Rational a = rng.signed_rational();
      const Rational b = rng.signed_rational();
      record(pr.linearity, phi(scale_add(v, w, a, b)) == a * phi(v) + b * phi(w),
             "phi(a v + b w) != a phi(v) + b phi(w) with a = " + a.to_string() + ", b = " + b.to_string());
    }

    const std::vector<Face> star_faces = star(*complex, Face::singleton(i));
    std::vector<Face> outside;
    for (Face s : complex->faces()) {
      if (!s.empty() && !std::binary_search(star_faces.begin(), star_faces.end(), s)) outside.push_back(s);
    }
    for (std::size_t g = 0; g < games_per_check; ++g) {
      const Game v = random_game(complex, rng);
      std::map<Face, Rational> values = v.support();
      for (Face s : outside) values[s] += rng.signed_rational();
      const Game moved(complex, values);
      record(pr.star_locality, phi(v) == phi(moved), "value changed when v moved off Star(" + std::to_string(i) + ")");
    }

    const Game solo = carrier_game(complex, Face::singleton(i), CarrierKind::Containment);
    record(pr.dummy, phi(solo) == Rational(1),
           "phi(v_{" + std::to_string(i) + "}) = " + phi(solo).to_string() + " != 1");
    for (std::size_t g = 0; g < games_per_check; ++g) {
      const Game v = random_dummy_game(complex, i, rng);
      const Rational expected = v(Face::singleton(i));
      const Rational got = phi(v);
      record(pr.dummy, got == expected,
             "dummy game: phi = " + got.to_string() + ", v({i}) = " + expected.to_string());
    }

    for (Face t : star_faces) {
      const Game hat = carrier_game(complex, t, CarrierKind::StrictContainment);
      const Rational got = phi(hat);
      record(pr.monotonicity, got.sign() >= 0,
             "phi(v^_" + t.to_string() + ") = " + got.to_string() + " < 0");
      if (t.empty()) continue;
      const Game plain = carrier_game(complex, t, CarrierKind::Containment);
      const Rational got_plain = phi(plain);
      record(pr.monotonicity, got_plain.sign() >= 0,
             "phi(v_" + t.to_string() + ") = " + got_plain.to_string() + " < 0");
    }
    for (std::size_t g = 0; g < games_per_check; ++g) {
      const Game v = random_monotone_game(complex, rng);
      const Rational got = phi(v);
      record(pr.monotonicity, got.sign() >= 0, "random monotone game: phi = " + got.to_string() + " < 0");
    }

    report.players.push_back(std::move(pr));
  }
  return report;
}

}  // namespace scg
