// Acceptance suite: every check is exact over the rationals. Prints one
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "scg/random.hpp"
#include "scg/symmetry.hpp"
#include "scg/values.hpp"

using namespace scg;
using namespace scg::testing;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      first_failure = what;
    }
  }
};

std::string where(const Fixture& f, Vertex i) { return f.name + " player " + std::to_string(i); }

bool is_shapley_fixture(const BruteComplex& b) {
  std::vector<std::uint64_t> first;
  for (Vertex i : b.vertices()) {
    const auto c = BruteComplex::counts(b.link(bit(i)));
    if (first.empty()) first = c;
    if (c != first) return false;
  }
  return true;
}

bool has_pure_links_fixture(const BruteComplex& b) {
  const std::size_t r = b.rank();
  for (Vertex i : b.vertices()) {
    const auto lk = b.link(bit(i));
    for (std::uint64_t t : lk) {
      // A maximal link face must have r - 1 vertices.
      bool maximal = true;
      for (std::uint64_t u : lk) maximal = maximal && !(u != t && (t & ~u) == 0);
      if (maximal && static_cast<std::size_t>(__builtin_popcountll(t)) != r - 1) return false;
    }
  }
  return true;
}

// 1. Generalized Shapley on 2^[n] equals the classical value.
Outcome classical_equivalence() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const Fixture f = power_set_fixture(n);
    const ComplexPtr c = build(f);
    RationalSampler rng(1000 + static_cast<std::uint64_t>(n));
    for (int g = 0; g < 100; ++g) {
      const Game v = random_game(c, rng);
      const Face players = c->facets().front();
      for (Vertex i = 1; i <= n; ++i) {
        const Rational value = generalized_shapley(v, i);
        const std::string at = where(f, i) + " game " + std::to_string(g);
        o.expect(value == classical_subset_formula(v, n, i), at + ": subset formula");
        o.expect(value == classical_shapley_oracle(v, players, i), at + ": arrival orders");
      }
    }
  }
  return o;
}

// 2. Carrier identities and dummy recovery.
Outcome carrier_identities() {
  Outcome o;
  for (const Fixture& f : acceptance_fixtures()) {
    const ComplexPtr c = build(f);
    const BruteComplex b(f);
    const TableSet tables = canonical_shapley_tables(*c);
    RationalSampler rng(2000);
    for (Vertex i : b.vertices()) {
      const ProbabilityTable& table = tables.at(i);
      for (std::uint64_t t : b.link(bit(i))) {
        const Face face = Face::from_mask(t);
        const Game hat = carrier_game(c, face, CarrierKind::StrictContainment);
        const Rational expected = b.shapley_weight(i, t);
        o.expect(table.weight(face) == expected, where(f, i) + ": canonical weight at " + face.to_string());
        o.expect(probabilistic_value(hat, i, table) == expected,
                 where(f, i) + ": strict carrier at " + face.to_string());
        o.expect(generalized_shapley(hat, i) == expected, where(f, i) + ": shapley of strict carrier");
      }
      const Game own = carrier_game(c, Face::singleton(i), CarrierKind::Containment);
      o.expect(probabilistic_value(own, i, table) == Rational(1), where(f, i) + ": own carrier");
      o.expect(generalized_shapley(own, i) == Rational(1), where(f, i) + ": own carrier (shapley)");
      for (int g = 0; g < 20; ++g) {
        const Game v = random_dummy_game(c, i, rng);
        // Dummy property checked on the test side before use.
        bool dummy = true;
        for (std::uint64_t t : b.link(bit(i))) {
          dummy = dummy && v(Face::from_mask(t | bit(i))) ==
                               v(Face::from_mask(t)) + v(Face::singleton(i));
        }
        o.expect(dummy, where(f, i) + ": generated game is not dummy");
        o.expect(probabilistic_value(v, i, table) == v(Face::singleton(i)), where(f, i) + ": dummy recovery");
      }
    }
  }
  return o;
}

// 3. p_k = 1/(r s_k) solves the common-probability system on s-Shapley fixtures.
Outcome shapley_p_solution_criterion() {
  Outcome o;
  for (const Fixture& f : all_fixtures()) {
    const BruteComplex b(f);
    if (!is_shapley_fixture(b) || !has_pure_links_fixture(b)) continue;
    const auto s = BruteComplex::counts(b.link(bit(b.vertices().front())));
    const std::size_t r = b.rank();
    std::vector<Rational> p;
    for (std::size_t k = 0; k < r; ++k) p.push_back(Rational(1) / Rational(static_cast<long>(r * s[k])));

    const ComplexPtr c = build(f);
    const RationalVector lib = shapley_p_solution(f_vector(link(*c, b.vertices().front())));
    o.expect(static_cast<std::size_t>(lib.size()) == r, f.name + ": solution length");
    for (std::size_t k = 0; k < r && k < static_cast<std::size_t>(lib.size()); ++k) {
      o.expect(lib(static_cast<Eigen::Index>(k)) == p[k], f.name + ": p_" + std::to_string(k));
    }
    for (Vertex i : b.vertices()) {
      const auto row = BruteComplex::counts(b.link(bit(i)));
      Rational lhs;
      for (std::size_t k = 0; k < r; ++k) lhs += Rational(static_cast<long>(row[k])) * p[k];
      o.expect(lhs - Rational(1) == Rational(0), where(f, i) + ": residual");
    }
    const PSystem sys = solve_p_system(*c);
    o.expect(is_zero_vector<Rational>(residual(sys.matrix, lib, sys.rhs)), f.name + ": library system residual");
  }
  return o;
}

// 4. Efficiency identity and the closed-form coefficients.
Outcome efficiency_identity() {
  Outcome o;
  for (const Fixture& f : all_fixtures()) {
    const BruteComplex b(f);
    if (!has_pure_links_fixture(b)) continue;
    const ComplexPtr c = build(f);
    const TableSet tables = canonical_shapley_tables(*c);
    const EfficiencyCoefficients coefficients = efficiency_coefficients(*c, tables);
    RationalSampler rng(4000);
    for (int g = 0; g < 50; ++g) {
      const Game v = random_game(c, rng);
      Rational total;
      for (Vertex i : b.vertices()) total += b.shapley(v, i);
      Rational rhs;
      for (const auto& [t, a] : coefficients.coefficients) rhs += a * v(t);
      o.expect(total == rhs, f.name + ": identity on game " + std::to_string(g));
      o.expect(check_efficiency_identity(*c, tables, v).holds, f.name + ": library check");
    }
    if (!is_shapley_fixture(b)) continue;
    const auto s = BruteComplex::counts(b.link(bit(b.vertices().front())));
    const std::size_t r = b.rank();
    std::size_t compared = 0;
    for (std::uint64_t t : b.faces()) {
      if (t == 0) continue;
      const auto k = static_cast<std::size_t>(__builtin_popcountll(t));
      Rational expected;
      if (b.ext(t).empty()) {
        expected = Rational(1) / Rational(static_cast<long>(s[r - 1]));
      } else {
        expected = (Rational(static_cast<long>(k)) / Rational(static_cast<long>(s[k - 1])) -
                    Rational(static_cast<long>(b.ext(t).size())) / Rational(static_cast<long>(s[k]))) /
                   Rational(static_cast<long>(r));
      }
      const auto it = coefficients.coefficients.find(Face::from_mask(t));
      const Rational actual = it == coefficients.coefficients.end() ? Rational(0) : it->second;
      o.expect(actual == expected, f.name + ": closed form at " + Face::from_mask(t).to_string());
      ++compared;
    }
    o.expect(compared == coefficients.coefficients.size(), f.name + ": coefficient count");
    o.expect(shapley_efficiency_closed_form(*c) == coefficients, f.name + ": library closed form");
  }
  return o;
}

// 5. Size-only weights under full symmetry, and transposition link maps.
Outcome symmetry_reduction() {
  Outcome o;
  std::size_t reductions = 0;
  for (const Fixture& f : all_fixtures()) {
    const ComplexPtr c = build(f);
    const BruteComplex b(f);
    if (check_pi_delta_contained(*c).contained) {
      ++reductions;
      const TableSet tables = canonical_shapley_tables(*c);
      std::map<std::size_t, Rational> by_size;
      for (const auto& [i, table] : tables) {
        for (const auto& [t, p] : table.weights()) {
          if (t.empty()) continue;
          const auto [it, fresh] = by_size.emplace(t.size(), p);
          o.expect(fresh || it->second == p, where(f, i) + ": weight differs at " + t.to_string());
        }
      }
      const SymmetryReductionReport report = check_symmetry_reduction(*c, tables);
      o.expect(report.holds, f.name + ": library reduction report");
      o.expect(report.common_weights == by_size, f.name + ": common weights");
    }
    if (f.n > kMaxExhaustiveSymmetryN) continue;
    const SymmetryGroup group = symm_group(*c);
    for (Vertex i : b.vertices()) {
      for (Vertex j : b.vertices()) {
        if (j <= i || !group.contains(Permutation::transposition(f.n, i, j))) continue;
        const auto map = transposition_link_map(*c, i, j);
        const auto li = b.link(bit(i));
        const auto lj = b.link(bit(j));
        std::set<std::uint64_t> sources;
        std::set<std::uint64_t> targets;
        for (const auto& [s, t] : map) {
          o.expect(s.size() == t.size(), where(f, i) + ": cardinality change");
          o.expect(std::binary_search(lj.begin(), lj.end(), t.mask()), where(f, i) + ": image outside link");
          sources.insert(s.mask());
          targets.insert(t.mask());
        }
        o.expect(sources == std::set<std::uint64_t>(li.begin(), li.end()), where(f, i) + ": domain");
        o.expect(targets.size() == lj.size(), where(f, i) + ": not a bijection");
        o.expect(BruteComplex::counts(li) == BruteComplex::counts(lj), where(f, i) + ": f-vectors differ");
        o.expect(f_vector(link(*c, i)) == f_vector(link(*c, j)), where(f, i) + ": library f-vectors differ");
      }
    }
  }
  o.expect(reductions >= 3, "fewer fixtures than expected satisfy the containment hypothesis");
  return o;
}

// 6. Structural queries against the brute-force scan, and group orders.
Outcome structural_oracles() {
  Outcome o;
  auto sorted_masks = [](const std::vector<Face>& faces) {
    std::vector<std::uint64_t> out;
    for (Face f : faces) out.push_back(f.mask());
    std::sort(out.begin(), out.end());
    return out;
  };
  auto fixtures = all_fixtures();
  fixtures.push_back({"strip with loose vertex", 12, {{1, 2, 3}, {2, 3, 5}, {3, 4, 5}, {12}}});
  for (const Fixture& f : fixtures) {
    if (f.n > 12) continue;
    const ComplexPtr c = build(f);
    const BruteComplex b(f);
    const auto faces = b.faces();
    o.expect(sorted_masks(c->faces()) == faces, f.name + ": face set");
    o.expect(f_vector(*c).entries == BruteComplex::counts(faces), f.name + ": f-vector");
    for (std::uint64_t s : faces) {
      const Face face = Face::from_mask(s);
      const std::string at = f.name + " at " + face.to_string();
      o.expect(sorted_masks(link(*c, face).faces()) == b.link(s), at + ": link");
      o.expect(sorted_masks(star(*c, face)) == b.star(s), at + ": star");
      o.expect(extension_set(*c, face) == b.ext(s), at + ": ext");
    }
  }
  std::size_t factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= static_cast<std::size_t>(n);
    o.expect(symm_group(*build(power_set_fixture(n))).order() == factorial, "Symm(2^[n]) order, n=" + std::to_string(n));
  }
  for (int n = 4; n <= 6; ++n) {
    o.expect(symm_group(*build(cycle_fixture(n))).order() == static_cast<std::size_t>(2 * n),
             "Symm(C_n) order, n=" + std::to_string(n));
  }
  return o;
}

// Decomposition matrix rebuilt from the brute-force model.
std::vector<std::vector<Rational>> decomposition_rows(const BruteComplex& b, const Fixture& f, Vertex i,
                                                      std::vector<std::uint64_t>& facets) {
  facets.clear();
  for (const auto& vs : f.facets) {
    const std::uint64_t m = mask_of(vs);
    if (m & bit(i)) facets.push_back(m);
  }
  std::vector<std::vector<Rational>> rows;
  for (std::uint64_t t : b.link(bit(i))) {
    std::vector<Rational> row;
    const auto k = static_cast<unsigned long>(__builtin_popcountll(t));
    for (std::uint64_t facet : facets) {
      const auto size = static_cast<unsigned long>(__builtin_popcountll(facet));
      row.push_back(((t | bit(i)) & ~facet) == 0 ? factorial(k) * factorial(size - k - 1) / factorial(size)
                                                 : Rational(0));
    }
    row.push_back(b.shapley_weight(i, t));
    rows.push_back(std::move(row));
  }
  return rows;
}

// 7. Facet decomposition of the value.
Outcome decomposition() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const Fixture f = power_set_fixture(n);
    const ComplexPtr c = build(f);
    for (Vertex i = 1; i <= n; ++i) {
      const Decomposition d = decompose_shapley(c, i, 7000);
      o.expect(d.status == DecompositionStatus::Exact, where(f, i) + ": status");
      o.expect(d.facet_weights.size() == 1 && d.facet_weights.begin()->second == Rational(1),
               where(f, i) + ": c = 1");
    }
  }
  std::size_t exact = 0;
  std::size_t infeasible = 0;
  for (const Fixture& f : {strip_fixture(), bowtie_fixture()}) {
    const ComplexPtr c = build(f);
    const BruteComplex b(f);
    for (Vertex i : b.vertices()) {
      const Decomposition d = decompose_shapley(c, i, 7000);
      std::vector<std::uint64_t> facets;
      const auto rows = decomposition_rows(b, f, i, facets);
      o.expect(d.facets.size() == facets.size(), where(f, i) + ": unknown count");
      if (d.status == DecompositionStatus::Exact) {
        ++exact;
        RationalSampler rng(7100);
        for (int g = 0; g < 20; ++g) {
          const Game v = random_game(c, rng);
          Rational weighted;
          for (const auto& [facet, weight] : d.facet_weights) {
            weighted += weight * classical_shapley_oracle(v, facet, i);
          }
          o.expect(weighted == b.shapley(v, i), where(f, i) + ": weighted facet sum, game " + std::to_string(g));
        }
        // The weights must satisfy every rebuilt equation.
        for (const auto& row : rows) {
          Rational lhs;
          for (std::size_t k = 0; k < facets.size(); ++k) {
            const auto it = d.facet_weights.find(Face::from_mask(facets[k]));
            o.expect(it != d.facet_weights.end(), where(f, i) + ": missing weight");
            if (it != d.facet_weights.end()) lhs += row[k] * it->second;
          }
          o.expect(lhs == row.back(), where(f, i) + ": equation violated");
        }
      } else {
        ++infeasible;
        // Independent re-elimination: the augmented rank exceeds the rank.
        std::vector<std::vector<Rational>> coefficient_rows;
        for (auto row : rows) {
          row.pop_back();
          coefficient_rows.push_back(std::move(row));
        }
        o.expect(independent_rank(rows) == independent_rank(coefficient_rows) + 1,
                 where(f, i) + ": re-elimination does not confirm inconsistency");
        o.expect(d.certificate.has_value(), where(f, i) + ": certificate missing");
        if (!d.certificate || static_cast<std::size_t>(d.certificate->size()) != rows.size() ||
            d.coalitions.size() != rows.size()) {
          continue;
        }
        // Certificate entries follow the library's coalition order.
        const auto link_masks = b.link(bit(i));
        std::vector<Rational> combo(facets.size() + 1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const auto pos = std::lower_bound(link_masks.begin(), link_masks.end(), d.coalitions[r].mask());
          o.expect(pos != link_masks.end() && *pos == d.coalitions[r].mask(), where(f, i) + ": coalition");
          if (pos == link_masks.end()) continue;
          const auto& row = rows[static_cast<std::size_t>(pos - link_masks.begin())];
          for (std::size_t k = 0; k <= facets.size(); ++k) {
            combo[k] += (*d.certificate)(static_cast<Eigen::Index>(r)) * row[k];
          }
        }
        for (std::size_t k = 0; k < facets.size(); ++k) o.expect(combo[k].is_zero(), where(f, i) + ": y^T A != 0");
        o.expect(!combo.back().is_zero(), where(f, i) + ": y^T b == 0");
      }
    }
  }
  o.expect(exact > 0 && infeasible > 0, "expected both verdicts on the strip and bowtie");
  return o;
}

// 8. Monotone games give nonnegative values.
Outcome monotonicity() {
  Outcome o;
  for (const Fixture& f : acceptance_fixtures()) {
    const ComplexPtr c = build(f);
    const BruteComplex b(f);
    RationalSampler rng(8000);
    const auto faces = b.faces();
    for (int g = 0; g < 100; ++g) {
      const Game v = random_monotone_game(c, rng);
      bool monotone = true;
      for (std::uint64_t s : faces) {
        for (std::uint64_t t : faces) {
          if ((s & ~t) == 0) monotone = monotone && v(Face::from_mask(s)) <= v(Face::from_mask(t));
        }
      }
      o.expect(monotone, f.name + ": generated game is not monotone");
      for (Vertex i : b.vertices()) {
        o.expect(generalized_shapley(v, i) >= Rational(0), where(f, i) + ": negative value");
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"classical equivalence on 2^[n], n=2..6", classical_equivalence},
      {"carrier identities and dummy recovery", carrier_identities},
      {"p_k = 1/(r s_k) solves the link system", shapley_p_solution_criterion},
      {"efficiency identity and closed-form coefficients", efficiency_identity},
      {"symmetry reduction and transposition link maps", symmetry_reduction},
      {"structural oracles and symmetry group orders", structural_oracles},
      {"facet decomposition", decomposition},
      {"monotone games give nonnegative values", monotonicity},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::printf("criterion %zu: %s  %s (%zu checks, %.2fs)%s%s\n", k + 1, o.passed ? "PASS" : "FAIL",
                criteria[k].first.c_str(), o.checks, seconds, o.passed ? "" : " first failure: ",
                o.first_failure.c_str());
  }
  std::printf("%s\n", all ? "all acceptance criteria passed" : "acceptance FAILED");
  return all ? 0 : 1;
}
