// Lattice polytope model: exact convex hull, face lattice, primitive facet
// normals, lattice lengths and normalized volumes of faces of every dimension.
//
// Face enumeration is brute force over vertex subsets (supporting-hyperplane
// search), exponential-ish in the number of points; inputs are capped at
// kMaxPoints. Certification targets are simplices and small polytopes, so
// exactness wins over asymptotic speed here.

#pragma once

#include "latgauss/int_linalg.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace latgauss {

// A face of a lattice polytope. For facets of full-dimensional polytopes the
// primitive outward normal and offset are stored, with <normal, x> <= offset
// on the polytope and equality exactly on the facet.
struct Face {
  std::vector<std::size_t> vertex_indices;  // sorted indices into the vertex list
  int dim = 0;
  std::optional<IntVec> outward_normal;
  std::optional<Int> offset;
};

class LatticePolytope {
 public:
  static constexpr std::size_t kMaxPoints = 24;

  // Convex hull of the given lattice points. Stores exactly the extreme
  // points as vertices and computes the whole face lattice up front.
  static LatticePolytope build(const std::vector<IntVec>& points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return static_cast<std::size_t>(dim_) == ambient_dim_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }

  // faces grouped by dimension 0..dim; the top entry is the polytope itself
  const std::vector<std::vector<Face>>& face_lattice() const { return faces_by_dim_; }
  const std::vector<Face>& faces_of_dim(int k) const;
  const std::vector<Face>& facets() const { return faces_of_dim(dim_ - 1); }
  const std::vector<Face>& edges() const { return faces_of_dim(1); }
  const Face& top_face() const { return faces_of_dim(dim_).front(); }

  // facets whose vertex set contains the given face
  std::vector<const Face*> facets_containing(const Face& f) const;
  // k-faces contained in the given face
  std::vector<const Face*> faces_within(const Face& f, int k) const;

  // |E ∩ Z^m| - 1 == content of the endpoint difference
  Int lattice_length(const Face& edge) const;
  // sum of lattice lengths over the edges of a 2-face
  Int lattice_perimeter(const Face& two_face) const;
  // normalized volume of a k-face, k >= 1: Euclidean volume divided by the
  // volume of a basis simplex of the face's affine lattice
  Int normalized_volume(const Face& f) const;
  Int normalized_volume() const { return normalized_volume(top_face()); }

  // The face re-embedded as a full-dimensional polytope in a lattice basis of
  // its affine hull. Second element maps sub-polytope vertex indices back to
  // this polytope's vertex indices.
  std::pair<LatticePolytope, std::vector<std::size_t>> face_as_polytope(const Face& f) const;

 private:
  LatticePolytope() = default;

  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<IntVec> vertices_;               // sorted, extreme points only
  std::vector<IntVec> reduced_vertices_;       // coordinates in Z^dim (== vertices_ if full-dim)
  std::vector<std::vector<Face>> faces_by_dim_;
};

// Coordinates of the given points in a lattice basis of (affine hull) ∩ Z^m,
// relative to points[0]. The result lives in Z^k, k = affine dimension.
std::vector<IntVec> lattice_coordinates(const std::vector<IntVec>& points);

// Decomposition of a full-dimensional polytope into simplices by fanning from
// the first vertex over recursively triangulated facets. Returns vertex-index
// tuples of size dim+1.
std::vector<std::vector<std::size_t>> fan_triangulation(const LatticePolytope& p);

}  // namespace latgauss
