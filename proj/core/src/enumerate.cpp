#include "latgauss/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace latgauss {

namespace {

constexpr int kMaxEnumDim = 6;  // (dim+1)! relabelings per candidate; desk scale

// all tuples (d_1..d_n) of positive integers with product <= max_vol, lex order
void diagonal_tuples(int n, const Int& max_vol, IntVec& cur, std::vector<IntVec>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  Int prod = 1;
  for (const Int& d : cur) prod *= d;
  for (Int d = 1; prod * d <= max_vol; ++d) {
    cur.push_back(d);
    diagonal_tuples(n, max_vol, cur, out);
    cur.pop_back();
  }
}

std::vector<IntVec> simplex_vertices(const IntMat& m) {
  std::vector<IntVec> vs{IntVec(m.rows(), 0)};
  for (std::size_t j = 0; j < m.cols(); ++j) vs.push_back(m.col(j));
  return vs;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// deterministic parallel map over an index range
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(jobs, count);
  std::exception_ptr error;
  std::mutex error_mu;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

IntMat simplex_canonical_form(const std::vector<IntVec>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("simplex_canonical_form: no vertices");
  const std::size_t d = vertices.front().size();
  if (vertices.size() != d + 1)
    throw std::invalid_argument("simplex_canonical_form: need exactly dim+1 vertices");
  for (const auto& v : vertices)
    if (v.size() != d)
      throw std::invalid_argument("simplex_canonical_form: inconsistent dimensions");

  {
    IntMat probe(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) probe(r, j) = vertices[j + 1][r] - vertices[0][r];
    if (det(probe) == 0)
      throw std::invalid_argument("simplex_canonical_form: vertices affinely dependent");
  }

  std::optional<IntMat> best;
  std::vector<std::size_t> others(d);
  for (std::size_t origin = 0; origin <= d; ++origin) {
    std::size_t k = 0;
    for (std::size_t i = 0; i <= d; ++i)
      if (i != origin) others[k++] = i;
    std::sort(others.begin(), others.end());
    do {
      IntMat m(d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < d; ++r)
          m(r, j) = vertices[others[j]][r] - vertices[origin][r];
      IntMat h = row_hnf(std::move(m));
      if (!best || h.lex_less(*best)) best = std::move(h);
    } while (std::next_permutation(others.begin(), others.end()));
  }
  return *best;
}

LatticePolytope simplex_polytope(const IntMat& m) {
  if (!m.square() || m.rows() == 0)
    throw std::invalid_argument("simplex_polytope: square nonempty matrix required");
  return LatticePolytope::build(simplex_vertices(m));
}

std::vector<SimplexClass> enumerate_simplices(const EnumerateOptions& opts) {
  if (opts.dim < 3) throw std::invalid_argument("enumerate_simplices: dimension must be >= 3");
  if (opts.dim > kMaxEnumDim)
    throw std::invalid_argument("enumerate_simplices: dimension cap is " +
                                std::to_string(kMaxEnumDim));
  if (opts.max_vol < 1) throw std::invalid_argument("enumerate_simplices: max_vol must be >= 1");

  const int n = opts.dim;
  std::vector<IntVec> diags;
  {
    IntVec cur;
    diagonal_tuples(n, opts.max_vol, cur, diags);
  }

  // each diagonal tuple is an independent work partition: enumerate all HNF
  // matrices with that diagonal and canonicalize each simplex
  const unsigned jobs = resolve_jobs(opts.jobs);
  std::vector<std::vector<IntMat>> per_partition(diags.size());
  parallel_for(diags.size(), jobs, [&](std::size_t pi) {
    const IntVec& diag = diags[pi];
    std::vector<IntMat>& sink = per_partition[pi];
    IntMat h(n, n);
    for (int i = 0; i < n; ++i) h(i, i) = diag[i];
    // positions above the diagonal, column-major; entry (i,j) runs over [0, d_j)
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (diag[j] > 1) slots.emplace_back(i, j);
    for (;;) {
      sink.push_back(simplex_canonical_form(simplex_vertices(h)));
      // mixed-radix increment over the off-diagonal slots
      std::size_t s = 0;
      while (s < slots.size()) {
        auto [i, j] = slots[s];
        h(i, j) += 1;
        if (h(i, j) < diag[j]) break;
        h(i, j) = 0;
        ++s;
      }
      if (s == slots.size()) break;
    }
  });

  std::vector<IntMat> all;
  for (auto& part : per_partition)
    for (auto& c : part) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [](const IntMat& a, const IntMat& b) {
    Int va = 1, vb = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) va *= a(i, i);
    for (std::size_t i = 0; i < b.rows(); ++i) vb *= b(i, i);
    if (va != vb) return va < vb;
    return a.lex_less(b);
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<SimplexClass> classes(all.size());
  parallel_for(all.size(), jobs, [&](std::size_t i) {
    SimplexClass& cls = classes[i];
    cls.canonical = std::move(all[i]);
    cls.volume = 1;
    for (std::size_t r = 0; r < cls.canonical.rows(); ++r) cls.volume *= cls.canonical(r, r);
    if (abs(det(cls.canonical)) != cls.volume)
      throw std::logic_error("enumerate_simplices: canonical determinant mismatch");
    const LatticePolytope poly = simplex_polytope(cls.canonical);
    cls.unimodular_facets = check_unimodular_facets(poly).all_unimodular;
    cls.smooth_dim1 = check_smooth_dim1(poly).pass;
  });
  return classes;
}

LemmaResult verify_lemma(const EnumerateOptions& opts, const LemmaFilters& filters) {
  LemmaResult result;
  std::vector<SimplexClass> classes = enumerate_simplices(opts);
  result.classes_checked = classes.size();
  for (auto& cls : classes) {
    if (cls.volume <= 1) continue;
    if (filters.require_smooth_dim1 && !cls.smooth_dim1) continue;
    if (filters.require_unimodular_facets && !cls.unimodular_facets) continue;
    result.counterexamples.push_back(std::move(cls));
  }
  return result;
}

LatticePolytope counterexample_family(const Int& p, const Int& q) {
  if (q < 1) throw std::invalid_argument("counterexample_family: q must be >= 1");
  if (gcd(p, q) != 1)
    throw std::invalid_argument("counterexample_family: p and q must be coprime");
  const LatticePolytope poly = LatticePolytope::build(
      {IntVec{0, 0, 0}, IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{1, p, q}});
  if (!check_unimodular_facets(poly).all_unimodular)
    throw std::logic_error("counterexample_family: facets came out non-unimodular");
  if (poly.normalized_volume() != q)
    throw std::logic_error("counterexample_family: volume != q");
  return poly;
}

}  // namespace latgauss
