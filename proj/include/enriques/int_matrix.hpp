#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace enriques {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0);
  static IntMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix diagonal(const IntVec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Int>& entries() const { return entries_; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_list() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Int& c) const;
  bool operator==(const IntMatrix& o) const = default;

  // Fraction-free Gaussian elimination (Bareiss).
  Int determinant() const;
  std::size_t rank() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntVec operator*(const IntVec& v, const IntMatrix& m);  // row vector times matrix
Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& c);
IntVec negate(const IntVec& a);
bool is_zero(const IntVec& a);
IntVec int_vec(std::initializer_list<long long> xs);
std::string to_string(const IntVec& v);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Rational inverse of a nonsingular square matrix.
std::vector<RatVec> rational_inverse(const IntMatrix& m);

}  // namespace enriques
