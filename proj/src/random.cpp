#include "scg/random.hpp"

#include "scg/error.hpp"

namespace scg {

std::int64_t RationalSampler::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational RationalSampler::signed_rational(std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t num = integer(-max_num, max_num);
  const std::int64_t den = integer(1, max_den);
  return Rational(num, den);
}

Rational RationalSampler::nonnegative_rational(std::int64_t max_num, std::int64_t max_den) {
  const std::int64_t num = integer(0, max_num);
  const std::int64_t den = integer(1, max_den);
  return Rational(num, den);
}

Game random_game(const ComplexPtr& complex, RationalSampler& rng) {
  std::map<Face, Rational> values;
  for (Face s : complex->faces()) {
    if (!s.empty()) values.emplace(s, rng.signed_rational());
  }
  return Game(complex, values);
}

Game random_dummy_game(const ComplexPtr& complex, Vertex i, RationalSampler& rng) {
  if (!complex->is_vertex(i)) {
    throw Error(ErrorCode::VertexNotInComplex, "vertex " + std::to_string(i) + " is not in the complex");
  }
  const Rational own = rng.signed_rational();
  std::map<Face, Rational> values;
  for (Face s : complex->faces()) {
    if (!s.empty() && !s.contains(i)) values.emplace(s, rng.signed_rational());
  }
  // Every face holding i is T ∪ i for exactly one T ∈ Link(i).
  for (Face s : complex->faces()) {
    if (!s.contains(i)) continue;
    const Face t = s.without(i);
    const auto it = values.find(t);
    values.emplace(s, (it == values.end() ? Rational(0) : it->second) + own);
  }
  return Game(complex, values);
}

Game random_monotone_game(const ComplexPtr& complex, RationalSampler& rng) {
  std::map<Face, Rational> increments;
  for (Face s : complex->faces()) {
    if (s.empty()) continue;
    // Sparse increments keep some marginals at exactly zero.
    if (rng.integer(0, 2) == 0) continue;
    increments.emplace(s, rng.nonnegative_rational());
  }
  std::map<Face, Rational> values;
  for (Face s : complex->faces()) {
    if (s.empty()) continue;
    Rational total;
    for_each_subset(s, [&](Face sub) {
      const auto it = increments.find(sub);
      if (it != increments.end()) total += it->second;
    });
    values.emplace(s, total);
  }
  return Game(complex, values);
}

}  // namespace scg
