// Obstruction chain for lattice polytopes: edge smoothness, facet
// unimodularity, degree and perimeter invariants, the dimension-3 surface
// obstruction, and the recursive certificate that a polytope is a standard
// simplex up to integer affine transformation.

#pragma once

#include "latgauss/polytope.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latgauss {

// One edge of the smoothness check: the primitive outward normals of every
// facet containing the edge, and whether they extend to a lattice basis.
struct EdgeCheck {
  Face edge;
  std::vector<IntVec> normals;
  bool pass = false;
};

struct SmoothDim1Report {
  bool pass = true;
  std::vector<EdgeCheck> edges;                 // every edge, deterministic order
  std::optional<std::size_t> first_failing;     // index into edges
};

struct FacetVolumeReport {
  std::vector<std::pair<Face, Int>> volumes;
  bool all_unimodular = true;
};

// Budget from the Smith–Thom bound with one projective-plane component:
// sum of facet areas must not exceed (sum of edge lengths) - 2.
struct SmithThomBudget {
  bool pass = false;
  Int face_area_sum;
  Int edge_length_sum;
  Int projective_plane_count;  // the assumed l >= 1, fixed at 1
  Int bound;                   // edge_length_sum - 2*projective_plane_count
};

struct SurfaceObstructionReport {
  bool pass = false;
  std::string failed_stage;  // empty when pass; otherwise the first failing stage
  std::string detail;
  SmithThomBudget budget;    // always filled in
};

struct CertificateReport {
  std::string polytope_id;
  int dim = 0;
  Int gauss_degree;
  SmoothDim1Report smooth_dim1;
  FacetVolumeReport facet_volumes;
  std::vector<std::pair<Face, Int>> outer_degrees;  // all 2-faces
  std::vector<std::pair<Face, Int>> edge_lengths;   // all edges
  std::optional<Int> khovanskii_betti;              // dimension 3 only
  std::optional<SurfaceObstructionReport> surface;  // dimension 3 only
  // (k, l) with 2k + l = gauss_degree; empty (reported as null) when
  // gauss_degree exceeds kMaxDecompositionVolume
  std::vector<std::pair<Int, Int>> decompositions;
  std::vector<std::string> facet_verdicts;          // dimension > 3 recursion
  std::string verdict;                              // "PASS" or "FAIL:<stage>"
};

// For every edge, test whether the primitive outward normals of the adjacent
// facets extend to a basis of the ambient lattice. Requires a full-dimensional
// polytope of dimension >= 3; for dimension 2 the condition degenerates (edges
// are facets) and the input is refused.
SmoothDim1Report check_smooth_dim1(const LatticePolytope& p);

// Normalized volume of every facet; all_unimodular iff each equals 1.
FacetVolumeReport check_unimodular_facets(const LatticePolytope& p);

// Degree of the logarithmic Gauss map of a generic hypersurface with this
// Newton polytope: the normalized volume.
Int log_gauss_degree(const LatticePolytope& p);

// Degree of the Gauss map restricted to the outer component over a 2-face:
// lattice perimeter minus 2.
Int outer_degree(const LatticePolytope& p, const Face& two_face);

// Total Betti number of the hypersurface attached to a 3-polytope:
// Vol - sum of facet areas + sum of edge lengths.
Int khovanskii_betti(const LatticePolytope& p);

// Largest volume whose decomposition table is materialized. The table holds
// vol/2 + 1 pairs, so unbounded volumes would exhaust memory; beyond the cap
// topology_decompositions refuses and certify leaves the table empty.
inline constexpr long long kMaxDecompositionVolume = 1'000'000;

// All (k, l) with 2k + l = vol, k copies of a sphere and l copies of
// projective space; ordered by k descending.
std::vector<std::pair<Int, Int>> topology_decompositions(const Int& vol);

// Dimension-3 obstruction stages, evaluated in order:
//   outer_degree_range        every 2-face has outer degree 1 or 2
//   unit_edges_and_triangles  every edge has length 1 and every 2-face is a
//                             triangle of outer degree 1
//   tetrahedron               exactly four facets
//   smith_thom_budget         face area sum <= edge length sum - 2
SurfaceObstructionReport surface_obstruction(const LatticePolytope& p);

// Full certificate: smoothness, then the dimension-3 obstruction or the
// facet recursion, then vertex count, then volume. The final volume test is
// implied by the earlier stages for simplices; a polytope passing everything
// else but failing it raises logic_error instead of reporting a verdict.
CertificateReport certify(const LatticePolytope& p);

// stable content hash of the sorted vertex list
std::string polytope_id(const LatticePolytope& p);

}  // namespace latgauss
