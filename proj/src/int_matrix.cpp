#include "enriques/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "enriques/errors.hpp"

namespace enriques {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InvalidInput("matrix entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  std::size_t c = rows.empty() ? cols : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<IntVec> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return from_rows(r);
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch in product");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator-() const { return scaled(-1); }

IntMatrix IntMatrix::scaled(const Int& c) const {
  IntMatrix m = *this;
  for (auto& e : m.entries_) e *= c;
  return m;
}

Int IntMatrix::determinant() const {
  if (!is_square()) throw InvalidInput("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  std::vector<RatVec> a(rows_, RatVec(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a[i][j] = Rational((*this)(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a[p][c] == 0) ++p;
    if (p == rows_) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols_; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << enriques::to_string(row(i));
  }
  os << ']';
  return os.str();
}

IntVec operator*(const IntVec& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw InvalidInput("vector/matrix shape mismatch");
  IntVec out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec scale(const IntVec& a, const Int& c) {
  IntVec out(a);
  for (auto& x : out) x *= c;
  return out;
}

IntVec negate(const IntVec& a) { return scale(a, -1); }

bool is_zero(const IntVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

IntVec int_vec(std::initializer_list<long long> xs) { return IntVec(xs.begin(), xs.end()); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::vector<RatVec> rational_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RatVec> a(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RatVec> out(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto r = rational_inverse(m);
  const std::size_t n = m.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (denominator(r[i][j]) != 1) throw InvalidInput("matrix is not unimodular");
      out(i, j) = numerator(r[i][j]);
    }
  return out;
}

}  // namespace enriques
