// Exact integer linear algebra over arbitrary-precision integers:
// determinants, Hermite and Smith normal forms, and the basis-extension
// predicate. No floating point anywhere in this layer.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgauss {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Thrown when an operation receives linearly dependent vectors where
// independent ones are required (distinct from a false predicate result).
class dependent_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rectangular matrix of arbitrary-precision integers, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntMat(std::vector<IntVec> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_columns(const std::vector<IntVec>& cols);
  static IntMat from_rows(const std::vector<IntVec>& rows) { return IntMat(rows); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMat transposed() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Int& k);
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const Int& k);

  friend bool operator==(const IntMat&, const IntMat&) = default;
  // lexicographic on (rows, cols, row-major entries); total order for canonical forms
  bool lex_less(const IntMat& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec operator*(const IntMat& a, const IntVec& v);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator+(const IntVec& a, const IntVec& b);

std::string to_string(const IntVec& v);
std::string to_string(const IntMat& m);

// gcd of absolute values of the entries; 0 iff v is the zero vector.
Int content(const IntVec& v);

// Exact determinant by fraction-free (Bareiss) elimination. Throws on
// non-square input.
Int det(const IntMat& m);

// Rank over the rationals, decided by fraction-free elimination.
std::size_t rank(const IntMat& m);

// Canonical row-style Hermite normal form of a nonsingular square matrix:
// H = U*M with U unimodular, H upper triangular, positive diagonal, and
// 0 <= H(i,j) < H(j,j) for i < j. Throws on singular input.
IntMat row_hnf(IntMat m);

struct SmithResult {
  IntMat d;     // diagonal, divisibility chain d1 | d2 | ...
  IntMat u;     // unimodular, u * input * v == d
  IntMat uinv;  // exact inverse of u
  IntMat v;     // unimodular
  std::size_t rank = 0;
};

// Smith normal form with transforms. Postconditions (u*m*v == d, u*uinv == I,
// |det v| == 1, divisibility chain) are verified on every call; violation
// throws std::logic_error.
SmithResult smith_normal_form(const IntMat& m);

// True iff the given vectors (in Z^ambient) extend to a basis of Z^ambient,
// i.e. all Smith invariant factors of their matrix equal 1. Throws
// dependent_input_error if the vectors are linearly dependent over Q.
bool extends_to_basis(const std::vector<IntVec>& vs);

// Alternative route to the same predicate: gcd of all maximal minors is 1.
// Kept separate so the two paths can be cross-checked.
bool extends_to_basis_minor_gcd(const std::vector<IntVec>& vs);

// gcd of all k x k minors of a k x m matrix (k <= m).
Int maximal_minor_gcd(const IntMat& m);

// floor division (quotient rounded toward -infinity), b != 0
Int floor_div(const Int& a, const Int& b);

}  // namespace latgauss
