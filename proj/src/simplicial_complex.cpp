#include "scg/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "scg/error.hpp"

namespace scg {

namespace {

void require_face(const SimplicialComplex& complex, Face s, const char* op) {
  if (!complex.contains(s)) {
    throw Error(ErrorCode::FaceNotInComplex,
                std::string(op) + ": face " + s.to_string() + " is not in the complex");
  }
}

}  // namespace

std::uint64_t FVector::total() const {
  return std::accumulate(entries.begin(), entries.end(), std::uint64_t{0});
}

std::string FVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries[k]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const FVector& f) { return os << f.to_string(); }

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> closed_faces)
    : n_(n), faces_(std::move(closed_faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  index_.reserve(faces_.size());
  index_.insert(faces_.begin(), faces_.end());
  rank_ = faces_.empty() ? 0 : faces_.back().size();

  for (Face f : faces_) {
    bool maximal = true;
    for (Vertex j = 1; j <= n_ && maximal; ++j) {
      if (!f.contains(j) && index_.contains(f.with(j))) maximal = false;
    }
    if (maximal) facets_.push_back(f);
  }
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const Face> facets) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
  if (n < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
  std::unordered_set<Face> closure;
  for (Face f : facets) {
    if (f.max_vertex() > n) {
      throw Error(ErrorCode::VertexOutOfRange, "face " + f.to_string() + " has a vertex id above n = " +
                                                   std::to_string(n));
    }
    if (closure.contains(f)) continue;
    for_each_subset(f, [&](Face sub) { closure.insert(sub); });
  }
  return SimplicialComplex(n, std::vector<Face>(closure.begin(), closure.end()));
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::initializer_list<Face> facets) {
  return from_facets(n, std::span<const Face>(facets.begin(), facets.size()));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "n = " + std::to_string(n) + " exceeds 64");
  }
  const std::unordered_set<Face> members(faces.begin(), faces.end());
  for (Face f : faces) {
    if (f.max_vertex() > n) {
      throw Error(ErrorCode::VertexOutOfRange, "face " + f.to_string() + " exceeds n");
    }
    for (Vertex v : f.vertices()) {
      if (!members.contains(f.without(v))) {
        throw Error(ErrorCode::NotDownwardClosed,
                    "face " + f.to_string() + " present without " + f.without(v).to_string());
      }
    }
  }
  return SimplicialComplex(n, std::move(faces));
}

bool SimplicialComplex::is_facet(Face f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n_; ++v) {
    if (is_vertex(v)) out.push_back(v);
  }
  return out;
}

bool SimplicialComplex::is_vertex(Vertex v) const {
  return v >= 1 && v <= n_ && index_.contains(Face::singleton(v));
}

SimplicialComplex link(const SimplicialComplex& complex, Face s) {
  require_face(complex, s, "link");
  std::vector<Face> out;
  for (Face t : complex.faces()) {
    if (t.is_disjoint_from(s) && complex.contains(t | s)) out.push_back(t);
  }
  return SimplicialComplex::from_faces(complex.n(), std::move(out));
}

SimplicialComplex link(const SimplicialComplex& complex, Vertex i) {
  if (!complex.is_vertex(i)) {
    throw Error(ErrorCode::FaceNotInComplex,
                "link: vertex " + std::to_string(i) + " is not in the complex");
  }
  return link(complex, Face::singleton(i));
}

std::vector<Face> star(const SimplicialComplex& complex, Face s) {
  require_face(complex, s, "star");
  std::unordered_set<Face> members;
  for (Face f : facets_containing(complex, s)) {
    for_each_subset(f, [&](Face sub) { members.insert(sub); });
  }
  std::vector<Face> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  if (complex.empty()) throw Error(ErrorCode::EmptyComplex, "f-vector of the empty complex");
  FVector out;
  out.entries.assign(complex.rank() + 1, 0);
  for (Face f : complex.faces()) ++out.entries[f.size()];
  return out;
}

SimplicialComplex skeleton(const SimplicialComplex& complex, std::size_t k) {
  std::vector<Face> out;
  for (Face f : complex.faces()) {
    if (f.size() <= k) out.push_back(f);
  }
  return SimplicialComplex::from_faces(complex.n(), std::move(out));
}

bool has_pure_links(const SimplicialComplex& complex) {
  const auto verts = complex.vertices();
  if (verts.empty()) throw Error(ErrorCode::EmptyComplex, "has_pure_links: no vertices");
  const std::size_t target = complex.rank() - 1;
  for (Vertex i : verts) {
    const SimplicialComplex lk = link(complex, i);
    for (Face f : lk.facets()) {
      if (f.size() != target) return false;
    }
  }
  return true;
}

std::vector<Vertex> extension_set(const SimplicialComplex& complex, Face t) {
  require_face(complex, t, "extension_set");
  std::vector<Vertex> out;
  for (Vertex j = 1; j <= complex.n(); ++j) {
    if (!t.contains(j) && complex.contains(t.with(j))) out.push_back(j);
  }
  return out;
}

std::vector<Face> facets_containing(const SimplicialComplex& complex, Face s) {
  require_face(complex, s, "facets_containing");
  std::vector<Face> out;
  for (Face f : complex.facets()) {
    if (s.is_subset_of(f)) out.push_back(f);
  }
  return out;
}

SimplicialComplex full_simplex(int n) {
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "full_simplex: n > 64");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const Face top = Face::from_mask(all);
  return SimplicialComplex::from_facets(n, {top});
}

SimplicialComplex simplex_boundary(int n) {
  std::vector<Face> facets;
  const Face top = full_simplex(n).facets().front();
  for (Vertex v = 1; v <= n; ++v) facets.push_back(top.without(v));
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex cycle_graph(int n) {
  std::vector<Face> edges;
  for (Vertex v = 1; v <= n; ++v) edges.push_back(Face{v, v % n + 1});
  return SimplicialComplex::from_facets(n, edges);
}

}  // namespace scg
