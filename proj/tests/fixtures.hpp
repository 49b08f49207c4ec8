#pragma once

// Test-side fixtures and brute-force oracles. The oracles work directly on
// bitmasks over the 2^n subsets of [n] and never call the library's
// complex queries.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scg/game.hpp"
#include "scg/rational.hpp"
#include "scg/simplicial_complex.hpp"

namespace scg::testing {

struct Fixture {
  std::string name;
  int n = 0;
  std::vector<std::vector<Vertex>> facets;
};

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

inline std::uint64_t mask_of(const std::vector<Vertex>& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

inline Fixture power_set_fixture(int n) {
  std::vector<Vertex> all;
  for (Vertex v = 1; v <= n; ++v) all.push_back(v);
  return {"2^[" + std::to_string(n) + "]", n, {all}};
}

inline Fixture cycle_fixture(int n) {
  Fixture f{"C" + std::to_string(n), n, {}};
  for (Vertex v = 1; v <= n; ++v) f.facets.push_back({v, v % n + 1});
  return f;
}

inline Fixture boundary4_fixture() { return {"boundary(2^[4])", 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}}; }

inline Fixture skeleton52_fixture() {
  Fixture f{"skeleton(2^[5],2)", 5, {}};
  for (Vertex a = 1; a <= 5; ++a)
    for (Vertex b = a + 1; b <= 5; ++b) f.facets.push_back({a, b});
  return f;
}

inline Fixture petersen_fixture() {
  return {"Petersen",
          10,
          {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
           {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}}};
}

inline Fixture strip_fixture() { return {"strip", 5, {{1, 2, 3}, {2, 3, 5}, {3, 4, 5}}}; }
inline Fixture bowtie_fixture() { return {"bowtie", 5, {{1, 2, 3}, {3, 4, 5}}}; }
inline Fixture path_fixture() { return {"path", 3, {{1, 2}, {2, 3}}}; }

/// The fixture list used by the acceptance criteria.
inline std::vector<Fixture> acceptance_fixtures() {
  std::vector<Fixture> out{strip_fixture(), bowtie_fixture()};
  for (int n = 1; n <= 5; ++n) out.push_back(power_set_fixture(n));
  out.push_back(boundary4_fixture());
  out.push_back(skeleton52_fixture());
  out.push_back(cycle_fixture(4));
  out.push_back(cycle_fixture(5));
  out.push_back(petersen_fixture());
  return out;
}

/// Acceptance fixtures plus a few extras for unit tests.
inline std::vector<Fixture> all_fixtures() {
  auto out = acceptance_fixtures();
  out.push_back(cycle_fixture(6));
  out.push_back(path_fixture());
  return out;
}

inline ComplexPtr build(const Fixture& f) {
  std::vector<Face> facets;
  for (const auto& vs : f.facets) facets.push_back(Face(std::span<const Vertex>(vs)));
  return share(SimplicialComplex::from_facets(f.n, facets));
}

/// Definitional model: a subset is a face iff it lies inside an input facet.
class BruteComplex {
 public:
  explicit BruteComplex(const Fixture& f) : n_(f.n) {
    for (const auto& vs : f.facets) facets_.push_back(mask_of(vs));
  }

  int n() const { return n_; }
  std::uint64_t universe() const { return std::uint64_t{1} << n_; }

  bool member(std::uint64_t s) const {
    for (std::uint64_t f : facets_) {
      if ((s & ~f) == 0) return true;
    }
    return false;
  }

  std::vector<std::uint64_t> faces() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < universe(); ++s)
      if (member(s)) out.push_back(s);
    return out;
  }

  std::vector<std::uint64_t> link(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < universe(); ++t)
      if ((t & s) == 0 && member(t | s)) out.push_back(t);
    return out;
  }

  /// Subsets of some face containing s.
  std::vector<std::uint64_t> star(std::uint64_t s) const {
    std::vector<std::uint64_t> out;
    const auto all = faces();
    for (std::uint64_t a = 0; a < universe(); ++a) {
      bool found = false;
      for (std::uint64_t t : all) found = found || ((s & ~t) == 0 && (a & ~t) == 0);
      if (found) out.push_back(a);
    }
    return out;
  }

  std::vector<Vertex> ext(std::uint64_t t) const {
    std::vector<Vertex> out;
    for (Vertex j = 1; j <= n_; ++j)
      if (!(t & bit(j)) && member(t | bit(j))) out.push_back(j);
    return out;
  }

  /// counts[k] = number of sets of cardinality k in the family.
  static std::vector<std::uint64_t> counts(const std::vector<std::uint64_t>& family) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s : family) {
      const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
      if (out.size() <= k) out.resize(k + 1, 0);
      ++out[k];
    }
    return out;
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v)
      if (member(bit(v))) out.push_back(v);
    return out;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (std::uint64_t s : faces()) r = std::max<std::size_t>(r, __builtin_popcountll(s));
    return r;
  }

  /// Canonical Shapley weight 1/((r_i+1) f_{|T|-1}(Link(i))).
  Rational shapley_weight(Vertex i, std::uint64_t t) const {
    const auto c = counts(link(bit(i)));
    const auto k = static_cast<std::size_t>(__builtin_popcountll(t));
    return Rational(1) / Rational(static_cast<long>(c.size() * c[k]));
  }

  /// Generalized Shapley value straight from its defining sum.
  Rational shapley(const Game& v, Vertex i) const {
    Rational sum;
    for (std::uint64_t t : link(bit(i))) {
      sum += shapley_weight(i, t) * (v(Face::from_mask(t | bit(i))) - v(Face::from_mask(t)));
    }
    return sum;
  }

 private:
  int n_;
  std::vector<std::uint64_t> facets_;
};

/// Classical Shapley value on 2^[n] via the subset-weight formula
/// Σ_S |S|!(n-|S|-1)!/n! (v(S ∪ i) - v(S)).
inline Rational classical_subset_formula(const Game& v, int n, Vertex i) {
  Rational sum;
  const std::uint64_t universe = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < universe; ++s) {
    if (s & bit(i)) continue;
    const auto k = static_cast<unsigned long>(__builtin_popcountll(s));
    const Rational w = factorial(k) * factorial(static_cast<unsigned long>(n) - k - 1) /
                       factorial(static_cast<unsigned long>(n));
    sum += w * (v(Face::from_mask(s | bit(i))) - v(Face::from_mask(s)));
  }
  return sum;
}

/// Rank of a rational matrix by plain row reduction on std::vector storage.
inline std::size_t independent_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace scg::testing
