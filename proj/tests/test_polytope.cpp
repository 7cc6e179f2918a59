#include "latgauss/polytope.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace latgauss;
using Rat = boost::multiprecision::cpp_rational;

namespace {

// ---- independent oracles ------------------------------------------------------

// exact membership test: p in conv(S) iff p is a convex combination of some
// affinely independent (d+1)-subset; solved over the rationals
bool rational_solve(std::vector<std::vector<Rat>> a, std::vector<Rat>& x) {
  const std::size_t n = a.size(), m = a[0].size() - 1;  // n equations, m unknowns
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const Rat d = a[row][col];
    for (auto& v : a[row]) v /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = 0; j <= m; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][m] != 0) return false;  // inconsistent
  x.assign(m, Rat(0));
  for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = a[i][m];
  return true;
}

bool oracle_in_hull(const IntVec& p, const std::vector<IntVec>& s) {
  const std::size_t d = p.size();
  const std::size_t k = d + 1;  // simplex size
  if (s.empty()) return false;
  std::vector<std::size_t> idx(std::min(k, s.size()));
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = s.size(), kk = idx.size();
  for (;;) {
    // solve sum
    // lambda_j * s[idx_j] = p, sum lambda_j = 1, lambda >= 0
    std::vector<std::vector<Rat>> a(d + 1, std::vector<Rat>(kk + 1));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t j = 0; j < kk; ++j) a[r][j] = Rat(s[idx[j]][r]);
      a[r][kk] = Rat(p[r]);
    }
    for (std::size_t j = 0; j < kk; ++j) a[d][j] = 1;
    a[d][kk] = 1;
    std::vector<Rat> lambda;
    if (rational_solve(a, lambda)) {
      bool ok = true;
      for (const auto& l : lambda)
        if (l < 0) ok = false;
      if (ok) return true;
    }
    bool adv = false;
    for (std::size_t i = kk; i-- > 0;)
      if (idx[i] < i + n - kk) {
        ++idx[i];
        for (std::size_t j = i + 1; j < kk; ++j) idx[j] = idx[j - 1] + 1;
        adv = true;
        break;
      }
    if (!adv) return false;
  }
}

std::vector<IntVec> oracle_vertices(const std::vector<IntVec>& pts) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<IntVec> rest;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    if (!oracle_in_hull(pts[i], rest)) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// lattice area of a triangle in Z^3 equals the content of the cross product of
// two edge vectors
Int oracle_triangle_area(const IntVec& a, const IntVec& b, const IntVec& c) {
  const IntVec u = b - a, v = c - a;
  IntVec cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
  return content(cross);
}

// count lattice points strictly inside plus endpoints by walking the bounding box
Int oracle_segment_length(const IntVec& a, const IntVec& b) {
  Int count = 0;
  // points p = a + t*(b-a)/L for integer t; just test all integer combinations
  // along each axis of the bounding box (small inputs only)
  std::vector<long long> lo(a.size()), hi(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long long x = a[i].convert_to<long long>(), y = b[i].convert_to<long long>();
    lo[i] = std::min(x, y);
    hi[i] = std::max(x, y);
  }
  std::vector<long long> cur(lo);
  for (;;) {
    // on segment iff (p-a) x (b-a) == 0 and 0 <= (p-a).(b-a) <= |b-a|^2
    IntVec p(cur.begin(), cur.end());
    const IntVec u = p - a, w = b - a;
    bool parallel = true;
    for (std::size_t i = 0; i < u.size() && parallel; ++i)
      for (std::size_t j = i + 1; j < u.size() && parallel; ++j)
        if (u[i] * w[j] != u[j] * w[i]) parallel = false;
    if (parallel) {
      Int dotp = 0, norm = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        dotp += u[i] * w[i];
        norm += w[i] * w[i];
      }
      if (dotp >= 0 && dotp <= norm) ++count;
    }
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == cur.size()) break;
    ++cur[i];
  }
  return count - 1;
}

// ---- helpers --------------------------------------------------------------------

std::vector<IntVec> pts(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVec> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

std::vector<std::size_t> f_vector(const LatticePolytope& p) {
  std::vector<std::size_t> f;
  for (int k = 0; k <= p.dim(); ++k) f.push_back(p.faces_of_dim(k).size());
  return f;
}

std::multiset<Int> edge_length_multiset(const LatticePolytope& p) {
  std::multiset<Int> out;
  for (const auto& e : p.edges()) out.insert(p.lattice_length(e));
  return out;
}

std::multiset<Int> facet_volume_multiset(const LatticePolytope& p) {
  std::multiset<Int> out;
  for (const auto& f : p.facets()) out.insert(p.normalized_volume(f));
  return out;
}

// random unimodular affine map: product of elementary row operations plus shift
std::vector<IntVec> random_unimodular_image(const std::vector<IntVec>& points,
                                            std::mt19937_64& rng) {
  const std::size_t d = points[0].size();
  IntMat u = IntMat::identity(d);
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = rng() % d, j = rng() % d;
    if (i == j) continue;
    u.add_row(i, j, Int(1 + rng() % 3) * (rng() % 2 ? 1 : -1));
  }
  IntVec shift(d);
  for (auto& x : shift) x = static_cast<long long>(rng() % 9) - 4;
  std::vector<IntVec> out;
  for (const auto& p : points) out.push_back(u * p + shift);
  return out;
}

const std::vector<IntVec> kUnitTetra = pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
const std::vector<IntVec> kStretchedTetra = pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2}});

}  // namespace

TEST_CASE("unit tetrahedron: faces, normals, volume") {
  const auto p = LatticePolytope::build(kUnitTetra);
  CHECK(p.dim() == 3);
  CHECK(p.full_dimensional());
  CHECK(f_vector(p) == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(p.normalized_volume() == 1);

  std::set<std::pair<IntVec, Int>> normals;
  for (const auto& f : p.facets()) {
    REQUIRE(f.outward_normal.has_value());
    normals.insert({*f.outward_normal, *f.offset});
    // outward orientation: every vertex weakly below, facet vertices exactly on
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      Int val = 0;
      for (std::size_t i = 0; i < 3; ++i) val += (*f.outward_normal)[i] * p.vertices()[v][i];
      const bool on_facet =
          std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), v);
      CHECK(val <= *f.offset);
      CHECK((val == *f.offset) == on_facet);
    }
  }
  const std::set<std::pair<IntVec, Int>> expected = {
      {IntVec{-1, 0, 0}, 0}, {IntVec{0, -1, 0}, 0}, {IntVec{0, 0, -1}, 0}, {IntVec{1, 1, 1}, 1}};
  CHECK(normals == expected);

  for (const auto& f : p.facets()) CHECK(p.normalized_volume(f) == 1);
  for (const auto& e : p.edges()) CHECK(p.lattice_length(e) == 1);
}

TEST_CASE("stretched tetrahedron: the facet system of conv{0,e1,e2,2e3}") {
  const auto p = LatticePolytope::build(kStretchedTetra);
  CHECK(p.normalized_volume() == 2);
  CHECK(f_vector(p) == std::vector<std::size_t>{4, 6, 4, 1});

  std::set<std::pair<IntVec, Int>> normals;
  for (const auto& f : p.facets()) normals.insert({*f.outward_normal, *f.offset});
  const std::set<std::pair<IntVec, Int>> expected = {
      {IntVec{-1, 0, 0}, 0}, {IntVec{0, -1, 0}, 0}, {IntVec{0, 0, -1}, 0}, {IntVec{2, 2, 1}, 2}};
  CHECK(normals == expected);

  CHECK(facet_volume_multiset(p) == std::multiset<Int>{1, 1, 2, 2});
  CHECK(edge_length_multiset(p) == std::multiset<Int>{1, 1, 1, 1, 1, 2});

  // the edge between e1 and e2 lies in the two facets with normals (0,0,-1), (2,2,1)
  const IntVec e1{1, 0, 0}, e2{0, 1, 0};
  for (const auto& e : p.edges()) {
    const IntVec& a = p.vertices()[e.vertex_indices[0]];
    const IntVec& b = p.vertices()[e.vertex_indices[1]];
    if (!((a == e1 && b == e2) || (a == e2 && b == e1))) continue;
    std::set<IntVec> adjacent;
    for (const Face* f : p.facets_containing(e)) adjacent.insert(*f->outward_normal);
    CHECK(adjacent == std::set<IntVec>{IntVec{0, 0, -1}, IntVec{2, 2, 1}});
  }
}

TEST_CASE("square pyramid: f-vector and volume") {
  const auto p =
      LatticePolytope::build(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  CHECK(f_vector(p) == std::vector<std::size_t>{5, 8, 5, 1});
  CHECK(p.normalized_volume() == 2);
}

TEST_CASE("boxes and dilated simplices have closed-form volumes") {
  for (long long a = 1; a <= 2; ++a)
    for (long long b = 1; b <= 3; ++b)
      for (long long c = 1; c <= 2; ++c) {
        std::vector<IntVec> corners;
        for (int m = 0; m < 8; ++m)
          corners.push_back(IntVec{Int((m & 1) ? a : 0), Int((m & 2) ? b : 0), Int((m & 4) ? c : 0)});
        const auto box = LatticePolytope::build(corners);
        CHECK(f_vector(box) == std::vector<std::size_t>{8, 12, 6, 1});
        CHECK(box.normalized_volume() == 6 * a * b * c);
      }
  for (long long d = 1; d <= 4; ++d) {
    const auto simplex = LatticePolytope::build(
        pts({{0, 0, 0}, {d, 0, 0}, {0, d, 0}, {0, 0, d}}));
    CHECK(simplex.normalized_volume() == d * d * d);
    for (const auto& e : simplex.edges()) CHECK(simplex.lattice_length(e) == d);
  }
}

TEST_CASE("octahedron: face lattice and volume") {
  const auto p = LatticePolytope::build(
      pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  CHECK(f_vector(p) == std::vector<std::size_t>{6, 12, 8, 1});
  CHECK(p.normalized_volume() == 8);
  // every edge borders exactly two facets
  for (const auto& e : p.edges()) CHECK(p.facets_containing(e).size() == 2);
}

TEST_CASE("interior and boundary non-vertices are dropped") {
  auto points = kUnitTetra;
  points.push_back(IntVec{0, 0, 0});  // duplicate
  const auto with_dup = LatticePolytope::build(points);
  CHECK(with_dup.vertices().size() == 4);

  // (1,1,1) is interior to 3*simplex, (1,0,0) sits on an edge of it
  const auto big = LatticePolytope::build(
      pts({{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}, {1, 0, 0}}));
  CHECK(big.vertices().size() == 4);
  CHECK(big.normalized_volume() == 27);
}

TEST_CASE("vertices agree with exact rational-hull oracle on random point sets") {
  std::mt19937_64 rng(21);
  int built = 0;
  while (built < 25) {
    std::vector<IntVec> points;
    const std::size_t n = 5 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i)
      points.push_back(IntVec{Int(rng() % 4), Int(rng() % 4), Int(rng() % 4)});
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 2) continue;
    ++built;
    const auto p = LatticePolytope::build(points);
    CHECK(p.vertices() == oracle_vertices(points));
  }
}

TEST_CASE("triangle faces match the cross-product area oracle") {
  std::mt19937_64 rng(22);
  int checked = 0;
  while (checked < 30) {
    std::vector<IntVec> points;
    for (int i = 0; i < 4; ++i)
      points.push_back(IntVec{Int(rng() % 7) - 3, Int(rng() % 7) - 3, Int(rng() % 7) - 3});
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() != 4) continue;
    const auto p = LatticePolytope::build(points);
    if (p.dim() != 3) continue;
    ++checked;
    for (const auto& f : p.facets()) {
      if (f.vertex_indices.size() != 3) continue;
      const auto& vs = p.vertices();
      CHECK(p.normalized_volume(f) == oracle_triangle_area(vs[f.vertex_indices[0]],
                                                           vs[f.vertex_indices[1]],
                                                           vs[f.vertex_indices[2]]));
    }
  }
}

TEST_CASE("lattice_length matches point counting") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    IntVec a{Int(rng() % 9) - 4, Int(rng() % 9) - 4, Int(rng() % 9) - 4};
    IntVec b{Int(rng() % 9) - 4, Int(rng() % 9) - 4, Int(rng() % 9) - 4};
    if (a == b) continue;
    const auto p = LatticePolytope::build({a, b});
    CHECK(p.dim() == 1);
    CHECK(p.lattice_length(p.edges().front()) == oracle_segment_length(a, b));
  }
}

TEST_CASE("lower-dimensional input reduces to lattice coordinates of its hull") {
  // triangle in the plane y = 0; stretched direction keeps area 2
  const auto p = LatticePolytope::build(pts({{0, 0, 0}, {1, 0, 0}, {0, 0, 2}}));
  CHECK(p.dim() == 2);
  CHECK_FALSE(p.full_dimensional());
  CHECK(p.normalized_volume() == 2);
  for (const auto& f : p.facets()) CHECK_FALSE(f.outward_normal.has_value());

  // same for a segment with interior points
  const auto seg = LatticePolytope::build(pts({{0, 0}, {2, 4}, {1, 2}}));
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(seg.normalized_volume() == 2);
}

TEST_CASE("face_as_polytope preserves lattice geometry") {
  const auto p = LatticePolytope::build(kStretchedTetra);
  for (const auto& f : p.facets()) {
    auto [sub, back] = p.face_as_polytope(f);
    CHECK(sub.full_dimensional());
    CHECK(sub.dim() == 2);
    CHECK(sub.normalized_volume() == p.normalized_volume(f));
    CHECK(back.size() == f.vertex_indices.size());
    // edge lengths survive the re-embedding
    for (const auto& e : sub.edges()) {
      const IntVec d_parent = p.vertices()[back[e.vertex_indices[1]]] -
                              p.vertices()[back[e.vertex_indices[0]]];
      CHECK(sub.lattice_length(e) == content(d_parent));
    }
  }
}

TEST_CASE("lattice invariants survive unimodular affine maps") {
  std::mt19937_64 rng(24);
  const std::vector<std::vector<IntVec>> bases = {
      kUnitTetra, kStretchedTetra,
      pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}),
      pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}})};
  for (const auto& base : bases) {
    const auto p = LatticePolytope::build(base);
    for (int it = 0; it < 8; ++it) {
      const auto q = LatticePolytope::build(random_unimodular_image(base, rng));
      CHECK(f_vector(q) == f_vector(p));
      CHECK(q.normalized_volume() == p.normalized_volume());
      CHECK(edge_length_multiset(q) == edge_length_multiset(p));
      CHECK(facet_volume_multiset(q) == facet_volume_multiset(p));
    }
  }
}

TEST_CASE("lattice_perimeter sums edge lengths of a 2-face") {
  const auto p = LatticePolytope::build(kStretchedTetra);
  Int total = 0;
  for (const auto& f : p.facets()) total += p.lattice_perimeter(f);
  // every edge lies in exactly two facets, so the total is twice the sum of lengths
  Int edge_sum = 0;
  for (const auto& e : p.edges()) edge_sum += p.lattice_length(e);
  CHECK(total == 2 * edge_sum);
  CHECK(edge_sum == 7);
}

TEST_CASE("degenerate and invalid inputs are rejected") {
  CHECK_THROWS_AS((void)LatticePolytope::build({}), std::invalid_argument);
  CHECK_THROWS_AS((void)LatticePolytope::build(pts({{1, 2}, {1, 2, 3}})), std::invalid_argument);

  const auto point = LatticePolytope::build(pts({{5, 5, 5}}));
  CHECK(point.dim() == 0);
  CHECK(point.vertices().size() == 1);

  std::vector<IntVec> many;
  for (long long i = 0; i < 30; ++i) many.push_back(IntVec{Int(i), Int(i * i), Int(i * i * i)});
  CHECK_THROWS_AS((void)LatticePolytope::build(many), std::invalid_argument);

  const auto p = LatticePolytope::build(kUnitTetra);
  CHECK_THROWS_AS((void)p.lattice_length(p.facets().front()), std::invalid_argument);
  CHECK_THROWS_AS((void)p.faces_of_dim(4), std::invalid_argument);
}
