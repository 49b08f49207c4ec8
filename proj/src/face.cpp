#include "scg/face.hpp"

#include <ostream>

#include "scg/error.hpp"

namespace scg {

namespace {

std::uint64_t bit_of(Vertex v) {
  if (v < 1 || v > kMaxVertices) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertices));
  }
  return std::uint64_t{1} << (v - 1);
}

}  // namespace

Face::Face(std::initializer_list<Vertex> vertices) {
  for (Vertex v : vertices) mask_ |= bit_of(v);
}

Face::Face(std::span<const Vertex> vertices) {
  for (Vertex v : vertices) mask_ |= bit_of(v);
}

Face Face::singleton(Vertex v) { return from_mask(bit_of(v)); }

bool Face::contains(Vertex v) const {
  if (v < 1 || v > kMaxVertices) return false;
  return (mask_ >> (v - 1)) & 1U;
}

Face Face::with(Vertex v) const { return from_mask(mask_ | bit_of(v)); }

Face Face::without(Vertex v) const { return from_mask(mask_ & ~bit_of(v)); }

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

Vertex Face::max_vertex() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

std::string Face::key() const {
  std::string out;
  for (Vertex v : vertices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string Face::to_string() const { return "{" + key() + "}"; }

std::ostream& operator<<(std::ostream& os, Face f) { return os << f.to_string(); }

}  // namespace scg
