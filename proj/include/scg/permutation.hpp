#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "scg/face.hpp"

namespace scg {

/// A bijection of [n]. images()[k] is the image of vertex k+1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `images` is a bijection of [n].
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, Vertex a, Vertex b);
  /// Product of disjoint cycles, e.g. from_cycles(5, {{1, 4}, {2, 5}}).
  static Permutation from_cycles(int n, std::initializer_list<std::initializer_list<Vertex>> cycles);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<Vertex>& images() const { return images_; }

  Vertex operator()(Vertex v) const { return images_.at(static_cast<std::size_t>(v - 1)); }
  Face operator()(Face f) const;

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

  /// (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace scg
