// Exhaustive enumeration of lattice simplices up to integer affine
// equivalence, bounded by normalized volume. Representatives are generated as
// upper-triangular Hermite normal forms and deduplicated by a canonical form
// taken over all vertex relabelings.

#pragma once

#include "latgauss/certify.hpp"

#include <vector>

namespace latgauss {

// One integer-affine equivalence class of full-dimensional lattice simplices.
// The columns of canonical are the edge vectors from the origin vertex.
struct SimplexClass {
  IntMat canonical;   // dim x dim upper-triangular Hermite normal form
  Int volume;         // product of the diagonal = |det(canonical)|
  bool unimodular_facets = false;
  bool smooth_dim1 = false;
};

struct EnumerateOptions {
  int dim = 3;
  Int max_vol = 20;
  unsigned jobs = 0;  // 0: use hardware concurrency
};

// Lexicographically least row-Hermite form of the edge matrix over every
// choice of origin vertex and every ordering of the remaining vertices.
// Input: the dim+1 affinely independent vertices of a full-dimensional simplex.
IntMat simplex_canonical_form(const std::vector<IntVec>& vertices);

// conv{0, columns of m}
LatticePolytope simplex_polytope(const IntMat& m);

// One representative per equivalence class of dim-dimensional simplices with
// normalized volume <= max_vol, sorted by (volume, canonical matrix).
// Output is identical for every jobs value.
std::vector<SimplexClass> enumerate_simplices(const EnumerateOptions& opts);

struct LemmaFilters {
  bool require_smooth_dim1 = true;
  bool require_unimodular_facets = true;
};

struct LemmaResult {
  std::vector<SimplexClass> counterexamples;
  std::size_t classes_checked = 0;
};

// Searches the enumeration for simplices of volume > 1 that pass the enabled
// filters. With both filters on, any hit contradicts the volume-reduction
// lemma, so the expected result is empty.
LemmaResult verify_lemma(const EnumerateOptions& opts, const LemmaFilters& filters = {});

// conv{0, e1, e2, (1,p,q)} for coprime (p,q), q >= 1: unimodular facets and
// normalized volume q. Asserts both postconditions.
LatticePolytope counterexample_family(const Int& p, const Int& q);

}  // namespace latgauss
