#include "scg/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scg/error.hpp"
#include "scg/game.hpp"

namespace scg {

namespace {

/// Exchanges L∖T with T∖L, pairing both in ascending order.
Permutation link_swap(int n, Face left, Face right) {
  const auto from = (left - right).vertices();
  const auto to = (right - left).vertices();
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t k = 0; k < from.size(); ++k) {
    images[static_cast<std::size_t>(from[k] - 1)] = to[k];
    images[static_cast<std::size_t>(to[k] - 1)] = from[k];
  }
  return Permutation(std::move(images));
}

std::optional<std::pair<Face, Face>> first_escape(const SimplicialComplex& complex,
                                                   const Permutation& pi) {
  for (Face f : complex.facets()) {
    const Face image = pi(f);
    if (!complex.contains(image)) return std::make_pair(f, image);
  }
  return std::nullopt;
}

}  // namespace

bool SymmetryGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool SymmetryGroup::satisfies_group_axioms() const {
  if (!contains(Permutation::identity(n))) return false;
  for (const auto& a : elements) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements) {
      if (!contains(a * b)) return false;
    }
  }
  return true;
}

SymmetryGroup symm_group(const SimplicialComplex& complex) {
  const int n = complex.n();
  if (n > kMaxExhaustiveSymmetryN) {
    throw Error(ErrorCode::GroundSetTooLarge,
                "exhaustive symmetry search is limited to n <= " + std::to_string(kMaxExhaustiveSymmetryN));
  }
  SymmetryGroup group;
  group.n = n;
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  // next_permutation walks image arrays in lexicographic order, so the
  // element list comes out sorted.
  do {
    Permutation pi(images);
    if (preserves(complex, pi)) group.elements.push_back(std::move(pi));
  } while (std::next_permutation(images.begin(), images.end()));
  return group;
}

std::string PiDeltaGenerator::describe() const {
  if (kind == GeneratorKind::Transposition) {
    return "transposition (" + std::to_string(vertex) + " " + std::to_string(other) + ")";
  }
  std::string out = "link swap i=" + std::to_string(vertex) + " L=" + left.to_string() +
                    " T=" + right.to_string() + " -> " + perm.to_string();
  if (overlapping) out += " [overlap: sorted pairing of L\\T with T\\L]";
  return out;
}

std::vector<PiDeltaGenerator> pi_delta_generators(const SimplicialComplex& complex) {
  std::vector<PiDeltaGenerator> out;
  std::set<Permutation> seen;
  const int n = complex.n();
  const auto verts = complex.vertices();

  std::map<Vertex, SimplicialComplex> links;
  for (Vertex i : verts) links.emplace(i, link(complex, i));

  for (Vertex i : verts) {
    const auto& faces = links.at(i).faces();
    for (std::size_t a = 0; a < faces.size(); ++a) {
      for (std::size_t b = a + 1; b < faces.size() && faces[b].size() == faces[a].size(); ++b) {
        PiDeltaGenerator g;
        g.perm = link_swap(n, faces[a], faces[b]);
        if (!seen.insert(g.perm).second) continue;
        g.kind = GeneratorKind::LinkSwap;
        g.vertex = i;
        g.left = faces[a];
        g.right = faces[b];
        g.overlapping = !faces[a].is_disjoint_from(faces[b]);
        out.push_back(std::move(g));
      }
    }
  }

  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const auto& li = links.at(verts[a]);
      const auto& lj = links.at(verts[b]);
      const bool meet = std::any_of(li.faces().begin(), li.faces().end(),
                                    [&](Face t) { return lj.contains(t); });
      if (!meet) continue;
      PiDeltaGenerator g;
      g.perm = Permutation::transposition(n, verts[a], verts[b]);
      if (!seen.insert(g.perm).second) continue;
      g.kind = GeneratorKind::Transposition;
      g.vertex = verts[a];
      g.other = verts[b];
      out.push_back(std::move(g));
    }
  }
  return out;
}

ContainmentReport check_pi_delta_contained(const SimplicialComplex& complex) {
  ContainmentReport report;
  for (auto& g : pi_delta_generators(complex)) {
    ++report.generators_checked;
    if (auto escape = first_escape(complex, g.perm)) {
      report.contained = false;
      report.violations.push_back({std::move(g), escape->first, escape->second});
    }
  }
  return report;
}

ShapleyClassification classify_shapley(const SimplicialComplex& complex) {
  const auto verts = complex.vertices();
  if (verts.empty()) throw Error(ErrorCode::EmptyComplex, "classify_shapley: no vertices");
  ShapleyClassification out;
  for (Vertex i : verts) out.link_f_vectors.emplace(i, f_vector(link(complex, i)));
  const FVector& reference = out.link_f_vectors.at(verts.front());
  for (const auto& [i, f] : out.link_f_vectors) {
    if (f != reference) {
      out.witness = std::make_pair(verts.front(), i);
      return out;
    }
  }
  out.is_shapley = true;
  out.s_vector = reference;
  return out;
}

PSystem solve_p_system(const SimplicialComplex& complex) {
  if (!has_pure_links(complex)) {
    throw Error(ErrorCode::NotPureLinks, "the p-system needs every vertex link pure of rank r-1");
  }
  const auto r = static_cast<Eigen::Index>(complex.rank());
  std::vector<FVector> rows;
  PSystem out;
  for (Vertex i : complex.vertices()) {
    const FVector f = f_vector(link(complex, i));
    const auto it = std::find(rows.begin(), rows.end(), f);
    if (it == rows.end()) {
      rows.push_back(f);
      out.row_vertices.push_back({i});
    } else {
      out.row_vertices[static_cast<std::size_t>(it - rows.begin())].push_back(i);
    }
  }
  out.matrix = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()), r);
  for (std::size_t row = 0; row < rows.size(); ++row) {
    for (Eigen::Index k = 0; k < r; ++k) {
      out.matrix(static_cast<Eigen::Index>(row), k) = Rational(rows[row].count(static_cast<std::size_t>(k)));
    }
  }
  out.rhs = RationalVector::Constant(out.matrix.rows(), Rational(1));
  out.solution = solve_exact(out.matrix, out.rhs);
  return out;
}

RationalVector shapley_p_solution(const FVector& s) {
  const auto r = static_cast<Eigen::Index>(s.size());
  RationalVector p(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    p(k) = Rational(1) / (Rational(r) * Rational(s[static_cast<std::size_t>(k)]));
  }
  return p;
}

SymmetryReductionReport check_symmetry_reduction(const SimplicialComplex& complex,
                                                 const TableSet& tables) {
  const ContainmentReport containment = check_pi_delta_contained(complex);
  if (!containment.contained) {
    throw Error(ErrorCode::HypothesisNotMet,
                "pi(Delta) is not contained in Symm(Delta): " +
                    containment.violations.front().generator.describe());
  }
  SymmetryReductionReport report;
  std::map<std::size_t, std::pair<Vertex, Face>> first_seen;
  for (Vertex i : complex.vertices()) {
    const auto it = tables.find(i);
    if (it == tables.end()) {
      throw Error(ErrorCode::MissingPlayerTable, "no table for player " + std::to_string(i));
    }
    const ProbabilityTable& table = it->second;
    const SimplicialComplex lk = link(complex, i);
    for (const auto& [t, p] : table.weights()) {
      if (!lk.contains(t)) {
        throw Error(ErrorCode::KeyOutsideLink,
                    "table key " + t.to_string() + " is outside Link(" + std::to_string(i) + ")");
      }
    }
    for (Face t : lk.faces()) {
      if (t.empty()) continue;
      const Rational p = table.weight(t);
      const auto [seen, inserted] = report.common_weights.emplace(t.size(), p);
      if (inserted) {
        first_seen.emplace(t.size(), std::make_pair(i, t));
        continue;
      }
      if (seen->second != p) {
        const auto& [ref_player, ref_face] = first_seen.at(t.size());
        report.holds = false;
        report.violation = SymmetryReductionReport::Violation{i, t, p, ref_player, ref_face, seen->second};
        return report;
      }
    }
  }
  return report;
}

std::vector<std::pair<Face, Face>> transposition_link_map(const SimplicialComplex& complex,
                                                          Vertex i, Vertex j) {
  std::vector<std::pair<Face, Face>> out;
  const SimplicialComplex lk = link(complex, i);
  for (Face t : lk.faces()) {
    out.emplace_back(t, t.contains(j) ? t.with(i).without(j) : t);
  }
  return out;
}

}  // namespace scg
