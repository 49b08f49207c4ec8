#include "scg/permutation.hpp"

#include <numeric>
#include <ostream>

#include "scg/error.hpp"

namespace scg {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  const int n = size();
  if (n > kMaxVertices) throw Error(ErrorCode::InvalidPermutation, "permutation of more than 64 points");
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::InvalidPermutation, "images do not form a bijection of [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, Vertex a, Vertex b) {
  if (a < 1 || a > n || b < 1 || b > n) {
    throw Error(ErrorCode::InvalidPermutation, "transposition point outside [n]");
  }
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int n,
                                     std::initializer_list<std::initializer_list<Vertex>> cycles) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& cycle : cycles) {
    const std::vector<Vertex> c(cycle);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || c[k] > n) throw Error(ErrorCode::InvalidPermutation, "cycle point outside [n]");
      images[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

Face Permutation::operator()(Face f) const {
  std::uint64_t out = 0;
  for (std::uint64_t m = f.mask(); m != 0; m &= m - 1) {
    const auto k = static_cast<std::size_t>(std::countr_zero(m));
    if (k >= images_.size()) throw Error(ErrorCode::DimensionMismatch, "face exceeds permutation size");
    out |= std::uint64_t{1} << (images_[k] - 1);
  }
  return Face::from_mask(out);
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    out.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<Vertex>(k + 1);
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<Vertex>(k + 1)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == static_cast<Vertex>(start + 1)) continue;
    out += '(';
    std::size_t k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first) out += ' ';
      out += std::to_string(k + 1);
      first = false;
      k = static_cast<std::size_t>(images_[k] - 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "composing permutations of different degree");
  Permutation out;
  out.images_.resize(b.images_.size());
  for (std::size_t k = 0; k < b.images_.size(); ++k) out.images_[k] = a(b.images_[k]);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

}  // namespace scg
