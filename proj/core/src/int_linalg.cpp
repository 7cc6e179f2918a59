#include "latgauss/int_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace latgauss {

IntMat::IntMat(std::vector<IntVec> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMat: ragged rows");
  }
  data_.reserve(rows_ * cols_);
  for (auto& r : rows)
    for (auto& x : r) data_.push_back(std::move(x));
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols) {
  if (cols.empty()) return IntMat();
  IntMat m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("IntMat: ragged columns");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMat::add_row(std::size_t i, std::size_t j, const Int& k) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMat::add_col(std::size_t i, std::size_t j, const Int& k) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

bool IntMat::lex_less(const IntMat& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] != other.data_[k]) return data_[k] < other.data_[k];
  }
  return false;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMat multiply: shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMat& a, const IntVec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("IntMat apply: shape mismatch");
  IntVec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("IntVec subtract: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("IntVec add: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j);
    }
  }
  os << "]";
  return os.str();
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int det(const IntMat& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

std::size_t rank(const IntMat& m) {
  IntMat w = m;
  const std::size_t r = w.rows(), c = w.cols();
  std::size_t piv = 0;
  Int prev = 1;
  for (std::size_t k = 0; k < c && piv < r; ++k) {
    std::size_t p = piv;
    while (p < r && w(p, k) == 0) ++p;
    if (p == r) continue;
    w.swap_rows(piv, p);
    for (std::size_t i = piv + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < c; ++j) {
        w(i, j) = (w(i, j) * w(piv, k) - w(i, k) * w(piv, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(piv, k);
    ++piv;
  }
  return piv;
}

IntMat row_hnf(IntMat h) {
  if (!h.square()) throw std::invalid_argument("row_hnf: matrix not square");
  const std::size_t n = h.rows();
  for (std::size_t j = 0; j < n; ++j) {
    // Euclidean reduction in column j, rows j..n-1
    for (;;) {
      std::size_t p = n;
      for (std::size_t i = j; i < n; ++i) {
        if (h(i, j) == 0) continue;
        if (p == n || boost::multiprecision::abs(h(i, j)) < boost::multiprecision::abs(h(p, j))) p = i;
      }
      if (p == n) throw std::invalid_argument("row_hnf: singular matrix");
      h.swap_rows(j, p);
      bool clear = true;
      for (std::size_t i = j + 1; i < n; ++i) {
        if (h(i, j) == 0) continue;
        Int q = h(i, j) / h(j, j);
        if (q != 0) h.add_row(i, j, -q);
        if (h(i, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(j, j) < 0) h.negate_row(j);
    for (std::size_t i = 0; i < j; ++i) {
      Int q = floor_div(h(i, j), h(j, j));
      if (q != 0) h.add_row(i, j, -q);
    }
  }
  return h;
}

namespace {

// Coupled elementary operations for SNF transform tracking.
struct SnfWork {
  IntMat a, u, uinv, v;

  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    uinv.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    uinv.negate_col(i);
  }
  void row_add(std::size_t i, std::size_t j, const Int& k) {  // row i += k*row j
    a.add_row(i, j, k);
    u.add_row(i, j, k);
    uinv.add_col(j, i, -k);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  void col_negate(std::size_t j) {
    a.negate_col(j);
    v.negate_col(j);
  }
  void col_add(std::size_t i, std::size_t j, const Int& k) {  // col i += k*col j
    a.add_col(i, j, k);
    v.add_col(i, j, k);
  }
};

void verify_snf(const IntMat& input, const SmithResult& s) {
  const std::size_t m = input.rows(), n = input.cols();
  if (s.u * input * s.v != s.d) throw std::logic_error("SNF: u*m*v != d");
  if (s.u * s.uinv != IntMat::identity(m)) throw std::logic_error("SNF: u*uinv != I");
  Int dv = det(s.v);
  if (dv != 1 && dv != -1) throw std::logic_error("SNF: v not unimodular");
  Int prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s.d(i, j) != 0) throw std::logic_error("SNF: d not diagonal");
    }
    if (i < n) {
      const Int& di = s.d(i, i);
      if (di < 0) throw std::logic_error("SNF: negative invariant factor");
      if (prev == 0 && di != 0 && i > 0) throw std::logic_error("SNF: zero before nonzero factor");
      if (prev != 0 && di % prev != 0) throw std::logic_error("SNF: divisibility chain broken");
      prev = di;
    }
  }
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  SnfWork w{m, IntMat::identity(r), IntMat::identity(r), IntMat::identity(c)};
  const std::size_t steps = std::min(r, c);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing submatrix to (t,t)
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (w.a(i, j) == 0) continue;
          if (pi == r || boost::multiprecision::abs(w.a(i, j)) <
                             boost::multiprecision::abs(w.a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == r) break;  // trailing submatrix is zero
      w.row_swap(t, pi);
      w.col_swap(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (w.a(i, t) == 0) continue;
        Int q = w.a(i, t) / w.a(t, t);
        if (q != 0) w.row_add(i, t, -q);
        if (w.a(i, t) != 0) dirty = true;
      }
      if (dirty) continue;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (w.a(t, j) == 0) continue;
        Int q = w.a(t, j) / w.a(t, t);
        if (q != 0) w.col_add(j, t, -q);
        if (w.a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // divisibility: pivot must divide the whole trailing block
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < c && fixed; ++j) {
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.row_add(t, i, 1);
            fixed = false;
          }
        }
      if (fixed) break;
    }
    if (t < c && w.a(t, t) < 0) w.row_negate(t);
  }

  SmithResult out{w.a, w.u, w.uinv, w.v, 0};
  for (std::size_t t = 0; t < steps; ++t) {
    if (out.d(t, t) != 0) ++out.rank;
  }
  verify_snf(m, out);
  return out;
}

bool extends_to_basis(const std::vector<IntVec>& vs) {
  if (vs.empty()) throw std::invalid_argument("extends_to_basis: no vectors");
  const std::size_t ambient = vs.front().size();
  if (vs.size() > ambient)
    throw dependent_input_error("extends_to_basis: more vectors than ambient rank");
  IntMat m = IntMat::from_rows(vs);
  if (rank(m) != vs.size())
    throw dependent_input_error("extends_to_basis: vectors linearly dependent");
  SmithResult s = smith_normal_form(m);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (s.d(i, i) != 1) return false;
  }
  return true;
}

Int maximal_minor_gcd(const IntMat& m) {
  const std::size_t k = m.rows(), n = m.cols();
  if (k > n) throw std::invalid_argument("maximal_minor_gcd: more rows than columns");
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Int g = 0;
  for (;;) {
    IntMat sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, idx[j]);
    g = boost::multiprecision::gcd(g, det(sub));
    if (g == 1) break;
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
  return boost::multiprecision::abs(g);
}

bool extends_to_basis_minor_gcd(const std::vector<IntVec>& vs) {
  if (vs.empty()) throw std::invalid_argument("extends_to_basis_minor_gcd: no vectors");
  if (vs.size() > vs.front().size())
    throw dependent_input_error("extends_to_basis_minor_gcd: more vectors than ambient rank");
  IntMat m = IntMat::from_rows(vs);
  if (rank(m) != vs.size())
    throw dependent_input_error("extends_to_basis_minor_gcd: vectors linearly dependent");
  return maximal_minor_gcd(m) == 1;
}

}  // namespace latgauss
