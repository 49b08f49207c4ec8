#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace scg {

/// 1-based vertex id.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A finite set of vertices in 1..64, stored as a bitmask (bit k <=> vertex k+1).
///
/// Faces order canonically: by cardinality, then lexicographically on the
/// sorted vertex lists.
class Face {
 public:
  constexpr Face() = default;

  /// Throws VertexOutOfRange for ids outside 1..64. Duplicates collapse.
  Face(std::initializer_list<Vertex> vertices);
  explicit Face(std::span<const Vertex> vertices);

  static constexpr Face from_mask(std::uint64_t mask) {
    Face f;
    f.mask_ = mask;
    return f;
  }
  static Face singleton(Vertex v);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }

  bool contains(Vertex v) const;
  constexpr bool is_subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool is_disjoint_from(Face other) const { return (mask_ & other.mask_) == 0; }

  Face with(Vertex v) const;
  Face without(Vertex v) const;

  /// Sorted vertex ids.
  std::vector<Vertex> vertices() const;
  /// Largest vertex id, 0 for the empty face.
  Vertex max_vertex() const;

  /// Comma-joined ids, e.g. "1,2,3"; "" for the empty face.
  std::string key() const;
  /// Set notation, e.g. "{1,2,3}".
  std::string to_string() const;

  friend constexpr Face operator|(Face a, Face b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr Face operator&(Face a, Face b) { return from_mask(a.mask_ & b.mask_); }
  friend constexpr Face operator-(Face a, Face b) { return from_mask(a.mask_ & ~b.mask_); }

  friend constexpr bool operator==(Face a, Face b) { return a.mask_ == b.mask_; }
  friend constexpr std::strong_ordering operator<=>(Face a, Face b) {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa <=> sb;
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    // Equal cardinality: the set holding the smallest element of the
    // symmetric difference comes first.
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  friend std::ostream& operator<<(std::ostream& os, Face f);

 private:
  std::uint64_t mask_ = 0;
};

/// Calls fn(sub) for every subset of face, including the empty face and face
/// itself.
template <typename Fn>
void for_each_subset(Face face, Fn&& fn) {
  const std::uint64_t full = face.mask();
  std::uint64_t sub = full;
  while (true) {
    fn(Face::from_mask(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace scg

template <>
struct std::hash<scg::Face> {
  std::size_t operator()(scg::Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.mask());
  }
};
