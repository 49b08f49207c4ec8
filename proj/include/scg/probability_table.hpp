#pragma once

#include <map>

#include "scg/face.hpp"
#include "scg/rational.hpp"

namespace scg {

/// Weights p_T over coalitions T ∈ Link(player, Δ) defining
/// φ_player(v) = Σ p_T (v(T ∪ player) - v(T)). Missing keys weigh 0.
///
/// Signed weights and totals other than 1 are representable; the flags below
/// only report which axioms the table can satisfy.
class ProbabilityTable {
 public:
  ProbabilityTable() = default;
  explicit ProbabilityTable(Vertex player, std::map<Face, Rational> weights = {})
      : player_(player), weights_(std::move(weights)) {}

  Vertex player() const { return player_; }
  const std::map<Face, Rational>& weights() const { return weights_; }
  Rational weight(Face t) const {
    const auto it = weights_.find(t);
    return it == weights_.end() ? Rational(0) : it->second;
  }

  Rational total() const {
    Rational sum;
    for (const auto& [t, p] : weights_) sum += p;
    return sum;
  }
  /// Σ p_T = 1.
  bool is_normalized() const { return total() == Rational(1); }
  /// Normalized and every p_T >= 0.
  bool is_probability() const {
    for (const auto& [t, p] : weights_) {
      if (p.sign() < 0) return false;
    }
    return is_normalized();
  }

  /// Copy with p_T replaced.
  ProbabilityTable with_weight(Face t, const Rational& p) const {
    ProbabilityTable out = *this;
    out.weights_[t] = p;
    return out;
  }

  friend bool operator==(const ProbabilityTable&, const ProbabilityTable&) = default;

 private:
  Vertex player_ = 0;
  std::map<Face, Rational> weights_;
};

/// One table per player, keyed by vertex id.
using TableSet = std::map<Vertex, ProbabilityTable>;

}  // namespace scg
