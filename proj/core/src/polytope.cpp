#include "latgauss/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace latgauss {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// matrix whose columns are points[i] - points[base], i != base
IntMat difference_columns(const std::vector<IntVec>& points, std::size_t base) {
  std::vector<IntVec> cols;
  cols.reserve(points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != base) cols.push_back(points[i] - points[base]);
  return IntMat::from_columns(cols);
}

std::size_t affine_rank(const std::vector<IntVec>& points) {
  if (points.size() <= 1) return 0;
  return rank(difference_columns(points, 0));
}

// Primitive kernel vector of a k x (k-1) matrix of rank k-1, via signed
// cofactors: n_i = (-1)^i det(B with row i removed).
IntVec hyperplane_normal(const IntMat& b) {
  const std::size_t k = b.rows();
  IntVec n(k);
  for (std::size_t i = 0; i < k; ++i) {
    IntMat minor(k - 1, k - 1);
    for (std::size_t r = 0, rr = 0; r < k; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c + 1 < k; ++c) minor(rr, c) = b(r, c);
      ++rr;
    }
    Int d = det(minor);
    n[i] = (i % 2 == 0) ? d : -d;
  }
  const Int g = content(n);
  if (g == 0) throw std::logic_error("hyperplane_normal: zero kernel vector");
  if (g != 1)
    for (auto& v : n) v /= g;
  return n;
}

struct HullFacet {
  IntVec normal;  // primitive, outward: <normal, x> <= offset
  Int offset;
  std::vector<std::size_t> point_indices;  // all input points on the facet
};

// Supporting-hyperplane search over all k-subsets of the points. Requires the
// points to affinely span Z^k (full-dimensional case) and k >= 1.
std::vector<HullFacet> brute_force_hull(const std::vector<IntVec>& pts, std::size_t k) {
  const std::size_t n = pts.size();
  std::map<std::pair<IntVec, Int>, std::vector<std::size_t>> found;

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    // candidate hyperplane through pts[idx[0..k-1]]
    IntMat span(k, k - 1);
    for (std::size_t j = 1; j < k; ++j) {
      IntVec d = pts[idx[j]] - pts[idx[0]];
      for (std::size_t r = 0; r < k; ++r) span(r, j - 1) = d[r];
    }
    if (rank(span) == k - 1) {
      IntVec normal = hyperplane_normal(span);
      Int offset = dot(normal, pts[idx[0]]);
      bool any_below = false, any_above = false;
      for (const auto& p : pts) {
        const Int v = dot(normal, p);
        if (v < offset) any_below = true;
        if (v > offset) any_above = true;
        if (any_below && any_above) break;
      }
      if (any_below && any_above) {
        // not supporting
      } else if (any_below == any_above) {
        throw std::logic_error("hull: all points on one hyperplane in full-dimensional input");
      } else {
        if (any_above) {  // flip to make the polytope side <=
          for (auto& v : normal) v = -v;
          offset = -offset;
        }
        auto key = std::make_pair(normal, offset);
        if (!found.count(key)) {
          std::vector<std::size_t> on;
          for (std::size_t i = 0; i < n; ++i)
            if (dot(normal, pts[i]) == offset) on.push_back(i);
          found.emplace(std::move(key), std::move(on));
        }
      }
    }
    // next k-combination of {0..n-1}
    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] < i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }

  std::vector<HullFacet> out;
  out.reserve(found.size());
  for (auto& [key, on] : found)
    out.push_back(HullFacet{key.first, key.second, std::move(on)});
  return out;
}

std::string point_to_string(const IntVec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

}  // namespace

std::vector<IntVec> lattice_coordinates(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("lattice_coordinates: no points");
  const IntMat g = difference_columns(points, 0);
  const SmithResult snf = smith_normal_form(g);
  const std::size_t k = snf.rank;
  if (k == 0) throw std::invalid_argument("lattice_coordinates: points coincide");
  // Rows of u below the rank annihilate every difference vector; the first k
  // coordinates of u*(p - p0) express p in a basis of the saturated lattice.
  std::vector<IntVec> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const IntVec d = p - points[0];
    const IntVec full = snf.u * d;
    for (std::size_t i = k; i < full.size(); ++i)
      if (full[i] != 0) throw std::logic_error("lattice_coordinates: point outside affine hull");
    out.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

LatticePolytope LatticePolytope::build(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("polytope: empty point list");
  const std::size_t m = points[0].size();
  if (m == 0) throw std::invalid_argument("polytope: points must have at least one coordinate");
  for (const auto& p : points)
    if (p.size() != m) throw std::invalid_argument("polytope: inconsistent point dimensions");

  std::vector<IntVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > kMaxPoints)
    throw std::invalid_argument("polytope: more than " + std::to_string(kMaxPoints) +
                                " distinct points");

  LatticePolytope poly;
  poly.ambient_dim_ = m;

  if (pts.size() == 1) {
    poly.dim_ = 0;
    poly.vertices_ = pts;
    poly.reduced_vertices_ = {IntVec{}};
    poly.faces_by_dim_ = {{Face{{0}, 0, std::nullopt, std::nullopt}}};
    return poly;
  }

  const std::size_t k = affine_rank(pts);
  const bool full_dim = (k == m);
  const std::vector<IntVec> work = full_dim ? pts : lattice_coordinates(pts);

  std::vector<HullFacet> hull = brute_force_hull(work, k);

  // vertices: points whose active facet normals span Z^k
  std::vector<std::size_t> vertex_of_point(pts.size(), SIZE_MAX);
  std::vector<std::size_t> vertex_points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> active;
    for (const auto& f : hull)
      if (std::binary_search(f.point_indices.begin(), f.point_indices.end(), i))
        active.push_back(f.normal);
    if (!active.empty() && rank(IntMat::from_rows(active)) == k) {
      vertex_of_point[i] = vertex_points.size();
      vertex_points.push_back(i);
    }
  }
  if (vertex_points.size() < k + 1)
    throw std::logic_error("polytope: fewer vertices than dimension+1");

  poly.dim_ = static_cast<int>(k);
  for (std::size_t i : vertex_points) {
    poly.vertices_.push_back(pts[i]);
    poly.reduced_vertices_.push_back(work[i]);
  }

  // facet faces keyed by their vertex sets, in vertex indices
  struct FacetRec {
    std::vector<std::size_t> vset;
    IntVec normal;
    Int offset;
  };
  std::vector<FacetRec> facet_recs;
  for (const auto& f : hull) {
    std::vector<std::size_t> vset;
    for (std::size_t i : f.point_indices)
      if (vertex_of_point[i] != SIZE_MAX) vset.push_back(vertex_of_point[i]);
    std::sort(vset.begin(), vset.end());
    facet_recs.push_back(FacetRec{std::move(vset), f.normal, f.offset});
  }
  std::sort(facet_recs.begin(), facet_recs.end(),
            [](const FacetRec& a, const FacetRec& b) { return a.vset < b.vset; });

  // all proper faces arise as intersections of facet vertex sets
  std::set<std::vector<std::size_t>> face_sets;
  for (const auto& f : facet_recs) face_sets.insert(f.vset);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<std::size_t>> snapshot(face_sets.begin(), face_sets.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        std::vector<std::size_t> meet;
        std::set_intersection(snapshot[a].begin(), snapshot[a].end(), snapshot[b].begin(),
                              snapshot[b].end(), std::back_inserter(meet));
        if (!meet.empty() && face_sets.insert(meet).second) grew = true;
      }
  }

  poly.faces_by_dim_.assign(k + 1, {});
  for (const auto& vset : face_sets) {
    std::vector<IntVec> coords;
    for (std::size_t v : vset) coords.push_back(poly.reduced_vertices_[v]);
    const int fdim = static_cast<int>(affine_rank(coords));
    poly.faces_by_dim_[fdim].push_back(Face{vset, fdim, std::nullopt, std::nullopt});
  }
  // attach normals to facets (meaningful in ambient coordinates only when full-dim)
  for (auto& face : poly.faces_by_dim_[k - 1]) {
    for (const auto& rec : facet_recs)
      if (rec.vset == face.vertex_indices) {
        if (full_dim) {
          face.outward_normal = rec.normal;
          face.offset = rec.offset;
        }
        break;
      }
  }
  std::vector<std::size_t> all(poly.vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  poly.faces_by_dim_[k].push_back(Face{all, static_cast<int>(k), std::nullopt, std::nullopt});
  for (auto& level : poly.faces_by_dim_)
    std::sort(level.begin(), level.end(),
              [](const Face& a, const Face& b) { return a.vertex_indices < b.vertex_indices; });

  // structural checks, always on
  if (poly.faces_by_dim_[0].size() != poly.vertices_.size())
    throw std::logic_error("polytope: face closure lost a vertex");
  Int euler = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const Int cnt = static_cast<Int>(poly.faces_by_dim_[j].size());
    euler += (j % 2 == 0) ? cnt : -cnt;
  }
  const Int expected = (k % 2 == 0) ? 0 : 2;
  if (euler != expected)
    throw std::logic_error("polytope: face counts violate the Euler relation");
  if (k >= 2) {
    for (const auto& ridge : poly.faces_by_dim_[k - 2]) {
      std::size_t count = 0;
      for (const auto& facet : poly.faces_by_dim_[k - 1])
        if (std::includes(facet.vertex_indices.begin(), facet.vertex_indices.end(),
                          ridge.vertex_indices.begin(), ridge.vertex_indices.end()))
          ++count;
      if (count != 2)
        throw std::logic_error("polytope: ridge not contained in exactly two facets");
    }
  }
  if (full_dim)
    for (const auto& facet : poly.faces_by_dim_[k - 1])
      if (content(*facet.outward_normal) != 1)
        throw std::logic_error("polytope: non-primitive facet normal");

  return poly;
}

const std::vector<Face>& LatticePolytope::faces_of_dim(int k) const {
  if (k < 0 || k > dim_)
    throw std::invalid_argument("faces_of_dim: dimension " + std::to_string(k) +
                                " out of range for a polytope of dimension " +
                                std::to_string(dim_));
  return faces_by_dim_[static_cast<std::size_t>(k)];
}

std::vector<const Face*> LatticePolytope::facets_containing(const Face& f) const {
  std::vector<const Face*> out;
  for (const auto& facet : facets())
    if (std::includes(facet.vertex_indices.begin(), facet.vertex_indices.end(),
                      f.vertex_indices.begin(), f.vertex_indices.end()))
      out.push_back(&facet);
  return out;
}

std::vector<const Face*> LatticePolytope::faces_within(const Face& f, int k) const {
  std::vector<const Face*> out;
  for (const auto& g : faces_of_dim(k))
    if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(),
                      g.vertex_indices.begin(), g.vertex_indices.end()))
      out.push_back(&g);
  return out;
}

Int LatticePolytope::lattice_length(const Face& edge) const {
  if (edge.dim != 1 || edge.vertex_indices.size() != 2)
    throw std::invalid_argument("lattice_length: not an edge");
  return content(vertices_[edge.vertex_indices[1]] - vertices_[edge.vertex_indices[0]]);
}

Int LatticePolytope::lattice_perimeter(const Face& two_face) const {
  if (two_face.dim != 2)
    throw std::invalid_argument("lattice_perimeter: not a 2-face");
  Int total = 0;
  for (const Face* e : faces_within(two_face, 1)) total += lattice_length(*e);
  return total;
}

std::pair<LatticePolytope, std::vector<std::size_t>> LatticePolytope::face_as_polytope(
    const Face& f) const {
  if (f.dim < 1) throw std::invalid_argument("face_as_polytope: face must have dimension >= 1");
  std::vector<IntVec> pts;
  pts.reserve(f.vertex_indices.size());
  for (std::size_t v : f.vertex_indices) pts.push_back(vertices_[v]);
  const std::vector<IntVec> coords =
      (static_cast<std::size_t>(f.dim) == ambient_dim_) ? pts : lattice_coordinates(pts);

  LatticePolytope sub = build(coords);
  std::vector<std::size_t> back(sub.vertices().size(), SIZE_MAX);
  for (std::size_t i = 0; i < sub.vertices().size(); ++i) {
    const auto it = std::find(coords.begin(), coords.end(), sub.vertices()[i]);
    if (it == coords.end())
      throw std::logic_error("face_as_polytope: sub-polytope vertex not among face vertices");
    back[i] = f.vertex_indices[static_cast<std::size_t>(it - coords.begin())];
  }
  if (sub.vertices().size() != f.vertex_indices.size())
    throw std::logic_error("face_as_polytope: face vertex " + point_to_string(pts[0]) +
                           "... not extreme in its own hull");
  return {std::move(sub), std::move(back)};
}

std::vector<std::vector<std::size_t>> fan_triangulation(const LatticePolytope& p) {
  if (!p.full_dimensional() || p.dim() < 1)
    throw std::invalid_argument("fan_triangulation: full-dimensional polytope required");
  if (p.dim() == 1) return {{0, p.vertices().size() - 1}};

  std::vector<std::vector<std::size_t>> out;
  constexpr std::size_t base = 0;
  for (const Face& f : p.facets()) {
    if (std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), base)) continue;
    auto [sub, back] = p.face_as_polytope(f);
    for (const auto& s : fan_triangulation(sub)) {
      std::vector<std::size_t> simplex{base};
      for (std::size_t i : s) simplex.push_back(back[i]);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

namespace {

Int full_dim_normalized_volume(const LatticePolytope& p) {
  Int total = 0;
  const auto& vs = p.vertices();
  for (const auto& simplex : fan_triangulation(p)) {
    std::vector<IntVec> cols;
    for (std::size_t j = 1; j < simplex.size(); ++j)
      cols.push_back(vs[simplex[j]] - vs[simplex[0]]);
    total += abs(det(IntMat::from_columns(cols)));
  }
  return total;
}

}  // namespace

Int LatticePolytope::normalized_volume(const Face& f) const {
  if (f.dim < 1)
    throw std::invalid_argument("normalized_volume: zero-dimensional face");
  return full_dim_normalized_volume(face_as_polytope(f).first);
}

}  // namespace latgauss
