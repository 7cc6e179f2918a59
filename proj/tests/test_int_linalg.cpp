#include "latgauss/int_linalg.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

using namespace latgauss;

namespace {

// ---- independent oracles, intentionally naive -------------------------------

long long oracle_gcd_fold(const std::vector<long long>& xs) {
  long long g = 0;
  for (long long x : xs) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// cofactor expansion along the first row; fine up to 6x6
long long oracle_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const long long term = m[0][j] * oracle_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Exhaustive search for a completion of k vectors in Z^3 to a +-1 determinant.
// Only valid as an oracle for small inputs: if the given vectors lie in a box
// [-B,B]^3, a completing vector can be reduced modulo them, so a window a few
// times wider than B suffices.
bool oracle_completes_to_basis_z3(std::vector<std::vector<long long>> vs, long long window) {
  if (vs.size() == 3) {
    const long long d = oracle_det(vs);
    return d == 1 || d == -1;
  }
  std::vector<long long> cand(3);
  for (cand[0] = -window; cand[0] <= window; ++cand[0])
    for (cand[1] = -window; cand[1] <= window; ++cand[1])
      for (cand[2] = -window; cand[2] <= window; ++cand[2]) {
        vs.push_back(cand);
        if (oracle_completes_to_basis_z3(vs, window)) return true;
        vs.pop_back();
      }
  return false;
}

// invariant factors from minor gcds: d_k = gcd(k-minors) / gcd((k-1)-minors)
std::vector<long long> oracle_invariant_factors(const std::vector<std::vector<long long>>& m) {
  const std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  const std::size_t n = std::min(r, c);
  std::vector<long long> minor_gcd(n + 1, 0);
  minor_gcd[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    long long g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    // enumerate k-subsets of rows and columns
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      for (;;) {
        std::vector<std::vector<long long>> sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[ri[i]][ci[j]];
        g = std::gcd(g, oracle_det(sub));
        bool adv = false;
        for (std::size_t i = k; i-- > 0;)
          if (ci[i] < i + c - k) {
            ++ci[i];
            for (std::size_t j = i + 1; j < k; ++j) ci[j] = ci[j - 1] + 1;
            adv = true;
            break;
          }
        if (!adv) break;
      }
      bool adv = false;
      for (std::size_t i = k; i-- > 0;)
        if (ri[i] < i + r - k) {
          ++ri[i];
          for (std::size_t j = i + 1; j < k; ++j) ri[j] = ri[j - 1] + 1;
          adv = true;
          break;
        }
      if (!adv) break;
    }
    minor_gcd[k] = g < 0 ? -g : g;
  }
  std::vector<long long> fac;
  for (std::size_t k = 1; k <= n; ++k) {
    if (minor_gcd[k] == 0) break;
    fac.push_back(minor_gcd[k] / minor_gcd[k - 1]);
  }
  return fac;
}

// ---- helpers ----------------------------------------------------------------

IntMat mat(const std::vector<std::vector<long long>>& rows) {
  std::vector<IntVec> rs;
  for (const auto& r : rows) rs.emplace_back(r.begin(), r.end());
  return IntMat::from_rows(rs);
}

std::vector<std::vector<long long>> rand_rows(std::mt19937_64& rng, std::size_t r, std::size_t c,
                                              long long lo, long long hi) {
  std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
  const unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
  for (auto& row : m)
    for (auto& x : row) x = lo + static_cast<long long>(rng() % span);
  return m;
}

}  // namespace

TEST_CASE("content: fixed values") {
  CHECK(content(IntVec{0, 0, 0}) == 0);
  CHECK(content(IntVec{2, 2, 1}) == 1);
  CHECK(content(IntVec{0, -2, 0}) == 2);
  CHECK(content(IntVec{6, -4, 10}) == 2);
  CHECK(content(IntVec{}) == 0);
}

TEST_CASE("content: matches gcd fold and scales linearly") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const auto rows = rand_rows(rng, 1, 4, -30, 30);
    IntVec v(rows[0].begin(), rows[0].end());
    CHECK(content(v) == oracle_gcd_fold(rows[0]));
    const long long k = static_cast<long long>(rng() % 11) - 5;
    IntVec kv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) kv[i] = v[i] * k;
    CHECK(content(kv) == abs(Int(k)) * content(v));
  }
}

TEST_CASE("det: fixed values") {
  CHECK(det(IntMat::identity(3)) == 1);
  // columns e1, e2, (1,1,2)
  CHECK(det(mat({{1, 0, 1}, {0, 1, 1}, {0, 0, 2}})) == 2);
  // columns e1, e2, (0,0,2)
  CHECK(det(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})) == 2);
  CHECK(det(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(det(IntMat()) == 1);
  CHECK(det(mat({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("det: matches cofactor expansion") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 5;
    const auto rows = rand_rows(rng, n, n, -6, 6);
    CHECK(det(mat(rows)) == oracle_det(rows));
  }
}

TEST_CASE("det: multiplicative and stable under transpose") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    const auto a = mat(rand_rows(rng, 4, 4, -5, 5));
    const auto b = mat(rand_rows(rng, 4, 4, -5, 5));
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(a.transposed()) == det(a));
  }
}

TEST_CASE("rank: fixed and random") {
  CHECK(rank(IntMat::identity(4)) == 4);
  CHECK(rank(mat({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank(mat({{1, 0}, {0, 1}, {1, 1}})) == 2);
  CHECK(rank(IntMat(3, 0)) == 0);

  std::mt19937_64 rng(14);
  for (int it = 0; it < 100; ++it) {
    // build a matrix of known rank k as a product of 4xk times kx5
    const std::size_t k = rng() % 4;
    IntMat a = mat(rand_rows(rng, 4, std::max<std::size_t>(k, 1), -4, 4));
    IntMat b = mat(rand_rows(rng, std::max<std::size_t>(k, 1), 5, -4, 4));
    if (k == 0) {
      a = IntMat(4, 1);
      b = IntMat(1, 5);
    }
    const std::size_t rk = rank(a * b);
    CHECK(rk <= k);
    if (k > 0 && rank(a) == k && rank(b) == k) CHECK(rk == k);
  }
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK(floor_div(6, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
}

TEST_CASE("row_hnf: canonical upper triangular form") {
  std::mt19937_64 rng(15);
  int nonsingular = 0;
  while (nonsingular < 150) {
    const std::size_t n = 2 + rng() % 3;
    const auto rows = rand_rows(rng, n, n, -7, 7);
    IntMat m = mat(rows);
    if (det(m) == 0) continue;
    ++nonsingular;
    IntMat h = row_hnf(m);

    for (std::size_t j = 0; j < n; ++j) {
      CHECK(h(j, j) > 0);
      for (std::size_t i = j + 1; i < n; ++i) CHECK(h(i, j) == 0);
      for (std::size_t i = 0; i < j; ++i) {
        CHECK(h(i, j) >= 0);
        CHECK(h(i, j) < h(j, j));
      }
    }
    CHECK(abs(det(m)) == det(h));
    CHECK(row_hnf(h) == h);

    // canonical under left-unimodular moves
    IntMat u = m;
    u.add_row(0, n - 1, Int(1 + rng() % 3));
    u.swap_rows(0, 1 % n);
    if (rng() % 2) u.negate_row(n - 1);
    CHECK(row_hnf(u) == h);
  }
}

TEST_CASE("smith_normal_form: fixed example") {
  const SmithResult s = smith_normal_form(mat({{2, 4}, {6, 8}}));
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 4);
  CHECK(s.rank == 2);
}

TEST_CASE("smith_normal_form: invariant factors match minor-gcd oracle") {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 120; ++it) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const auto rows = rand_rows(rng, r, c, -6, 6);
    const SmithResult s = smith_normal_form(mat(rows));
    const auto fac = oracle_invariant_factors(rows);
    CHECK(s.rank == fac.size());
    for (std::size_t i = 0; i < fac.size(); ++i) CHECK(s.d(i, i) == fac[i]);
  }
}

TEST_CASE("extends_to_basis: fixed values") {
  CHECK(extends_to_basis({{1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(extends_to_basis({{0, 0, -1}, {2, 2, 1}}));
  CHECK_FALSE(extends_to_basis({{2, 0, 0}}));
  CHECK(extends_to_basis({{0, 0, -1}, {0, -1, 0}}));
  CHECK(extends_to_basis({{3, 2}, {4, 3}}));  // det 1, already a basis
}

TEST_CASE("extends_to_basis: rejects dependent input") {
  CHECK_THROWS_AS((void)extends_to_basis({{1, 0, 0}, {2, 0, 0}}), dependent_input_error);
  CHECK_THROWS_AS((void)extends_to_basis({{1, 1, 1}, {1, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
                  dependent_input_error);
  CHECK_THROWS_AS((void)extends_to_basis({{0, 0, 0}}), dependent_input_error);
  CHECK_THROWS_AS((void)extends_to_basis_minor_gcd({{1, 0}, {-1, 0}}), dependent_input_error);
}

TEST_CASE("extends_to_basis: agrees with exhaustive completion search in Z^3") {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 40) {
    const auto rows = rand_rows(rng, 1 + rng() % 2, 3, -2, 2);
    std::vector<IntVec> vs;
    for (const auto& r : rows) vs.emplace_back(r.begin(), r.end());
    if (rank(IntMat::from_rows(vs)) != vs.size()) continue;
    ++checked;
    CHECK(extends_to_basis(vs) == oracle_completes_to_basis_z3(rows, 4));
  }
}

TEST_CASE("extends_to_basis: both routes agree") {
  std::mt19937_64 rng(18);
  int checked = 0;
  while (checked < 150) {
    const std::size_t k = 1 + rng() % 3;
    const auto rows = rand_rows(rng, k, 4, -5, 5);
    std::vector<IntVec> vs;
    for (const auto& r : rows) vs.emplace_back(r.begin(), r.end());
    if (rank(IntMat::from_rows(vs)) != vs.size()) continue;
    ++checked;
    CHECK(extends_to_basis(vs) == extends_to_basis_minor_gcd(vs));
  }
}

TEST_CASE("maximal_minor_gcd: fixed values") {
  CHECK(maximal_minor_gcd(mat({{0, 0, -1}, {2, 2, 1}})) == 2);
  CHECK(maximal_minor_gcd(mat({{1, 0, 0}, {0, 1, 0}})) == 1);
  CHECK(maximal_minor_gcd(mat({{2, 4, 6}})) == 2);
  CHECK(maximal_minor_gcd(mat({{0, 0}, {0, 0}})) == 0);
}
