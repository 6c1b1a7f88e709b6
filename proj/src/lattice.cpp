#include "enriques/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "enriques/errors.hpp"

namespace enriques {

namespace {

Rational rat_floor(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return Rational(q);
}

Int floor_int(const Rational& r) { return numerator(rat_floor(r)); }

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Row operations on (A, U); column operations on (A, V, V_inv).
struct SnfState {
  IntMatrix A, U, V, V_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < V_inv.cols(); ++c) std::swap(V_inv(i, c), V_inv(j, c));
  }
  // row_i -= q * row_j
  void row_sub(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) -= q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) -= q * U(j, c);
  }
  // col_i -= q * col_j
  void col_sub(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) -= q * A(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) -= q * V(r, j);
    for (std::size_t c = 0; c < V_inv.cols(); ++c) V_inv(j, c) += q * V_inv(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
  }
};

// Row-style Hermite normal form; zero rows removed.
IntMatrix hermite_rows(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (piv == m || abs_int(a(i, c)) < abs_int(a(piv, c)))) piv = i;
      if (piv == m) break;
      if (piv != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(piv, j));
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(r, c);
        for (std::size_t j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m || a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_int(Rational(a(i, c), a(r, c)));
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

// q_ii and q_ij (i<j) with Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
// Returns false if a pivot is not positive.
bool quadratic_completion(const IntMatrix& gram, std::vector<RatVec>& q) {
  const std::size_t n = gram.rows();
  q.assign(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rational(gram(i, j));
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i] <= 0) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] = q[i][j] / q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(IntMatrix gram, Rational scale) : gram_(std::move(gram)), scale_(std::move(scale)) {
  if (!gram_.is_symmetric()) throw InvalidInput("gram matrix must be square and symmetric");
  if (scale_ == 0) throw InvalidInput("lattice scale must be nonzero");
}

Rational Lattice::inner(const IntVec& a, const IntVec& b) const {
  return scale_ * Rational(raw_inner(a, b));
}

Int Lattice::raw_inner(const IntVec& a, const IntVec& b) const {
  if (a.size() != rank() || b.size() != rank()) throw InvalidInput("vector length does not match lattice rank");
  return dot(a * gram_, b);
}

bool Lattice::is_integral() const {
  for (const auto& e : gram_.entries())
    if (denominator(scale_ * Rational(e)) != 1) return false;
  return true;
}

IntMatrix Lattice::scaled_gram() const {
  IntMatrix g(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational v = scale_ * Rational(gram_(i, j));
      if (denominator(v) != 1) throw InvalidInput("lattice is not integral at this scale");
      g(i, j) = numerator(v);
    }
  return g;
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  IntMatrix g = scaled_gram();
  for (std::size_t i = 0; i < rank(); ++i)
    if (g(i, i) % 2 != 0) return false;
  return true;
}

// ---------------------------------------------------------------- Sublattice

Sublattice::Sublattice(Lattice amb, IntMatrix b) : ambient(std::move(amb)), basis(std::move(b)) {
  if (basis.rows() > 0 && basis.cols() != ambient.rank())
    throw InvalidInput("sublattice basis has wrong number of columns");
  if (basis.rows() == 0) basis = IntMatrix(0, ambient.rank());
  if (basis.rank() != basis.rows()) throw InvalidInput("sublattice basis is not linearly independent");
}

Sublattice::Sublattice(Lattice amb, const std::vector<IntVec>& rows)
    : Sublattice(amb, IntMatrix::from_rows(rows, amb.rank())) {}

IntMatrix Sublattice::gram() const { return basis * ambient.gram() * basis.transpose(); }

Lattice Sublattice::as_lattice() const { return Lattice(gram(), ambient.scale()); }

IntVec Sublattice::to_ambient(const IntVec& coords) const { return coords * basis; }

std::optional<IntVec> Sublattice::coordinates(const IntVec& v) const {
  if (v.size() != ambient.rank()) throw InvalidInput("vector length does not match ambient rank");
  const std::size_t k = rank();
  if (k == 0) return is_zero(v) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  SmithForm s = smith_normal_form(basis);
  // c * U^-1 * D * V^-1 = v  <=>  (c * U^-1) * D = v * V
  IntVec y = v * s.V;
  IntVec z(k);
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (j >= k) {
      if (y[j] != 0) return std::nullopt;
      continue;
    }
    if (y[j] % s.D(j, j) != 0) return std::nullopt;
    z[j] = y[j] / s.D(j, j);
  }
  return z * s.U;
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const auto& d : orders) o *= d;
  return o;
}

// ---------------------------------------------------------------- SNF

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfState st{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};
  auto& A = st.A;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (A(i, j) != 0 && (pi == rows || abs_int(A(i, j)) < abs_int(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        st.row_sub(i, t, A(i, t) / A(t, t));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        st.col_sub(j, t, A(t, j) / A(t, t));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (A(i, j) % A(t, t) != 0) {
            st.row_sub(t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t < rows && t < cols && A(t, t) < 0) st.negate_row(t);
  }
  return SmithForm{st.U, st.A, st.V, st.V_inv};
}

IntMatrix row_span_basis(const IntMatrix& m) { return hermite_rows(m); }

IntMatrix integer_kernel(const IntMatrix& m) {
  // x with m * x^T = 0; U m V = D, kernel spanned by trailing columns of V.
  const std::size_t n = m.cols();
  SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(s.D.rows(), n) && s.D(r, r) != 0) ++r;
  IntMatrix k(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - r, j) = s.V(j, i);
  return hermite_rows(k);
}

// ---------------------------------------------------------------- saturation, complements

Sublattice saturate(const Sublattice& s) {
  const std::size_t k = s.rank();
  if (k == 0) return s;
  SmithForm f = smith_normal_form(s.basis);
  Int index = 1;
  for (std::size_t i = 0; i < k; ++i) index *= f.D(i, i);
  if (index == 1) return s;
  IntMatrix b(k, s.basis.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = f.V_inv(i, j);
  return Sublattice(s.ambient, hermite_rows(b));
}

Sublattice orthogonal_complement(const Sublattice& s) {
  const std::size_t n = s.ambient.rank();
  if (s.rank() == 0) return Sublattice(s.ambient, IntMatrix::identity(n));
  return Sublattice(s.ambient, integer_kernel(s.basis * s.ambient.gram()));
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  IntMatrix g = l.scaled_gram();
  if (g.determinant() == 0) throw InvalidInput("degenerate lattice");
  SmithForm s = smith_normal_form(g);
  bool even = l.is_even();
  DiscriminantGroup out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const Int& d = s.D(i, i);
    if (d == 1) continue;
    RatVec gen(g.rows());
    for (std::size_t j = 0; j < g.rows(); ++j) gen[j] = Rational(s.V(j, i), d);
    out.generators.push_back(gen);
    out.orders.push_back(d);
    if (even) {
      Rational q = 0;
      for (std::size_t a = 0; a < g.rows(); ++a)
        for (std::size_t b = 0; b < g.rows(); ++b) q += gen[a] * Rational(g(a, b)) * gen[b];
      q -= 2 * rat_floor(q / 2);
      out.qvalues.push_back(q);
    }
  }
  return out;
}

// ---------------------------------------------------------------- enumeration

std::vector<IntVec> short_vectors(const IntMatrix& qform, const Int& bound) {
  const std::size_t n = qform.rows();
  std::vector<RatVec> q;
  if (!quadratic_completion(qform, q)) throw InvalidInput("enumeration requires definite lattice");
  std::vector<IntVec> out;
  if (n == 0 || bound <= 0) return out;
  IntVec x(n);
  const Rational B(bound);

  std::function<void(std::size_t, const Rational&)> recurse = [&](std::size_t i, const Rational& budget) {
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= q[i][j] * Rational(x[j]);
    const Rational& qii = q[i][i];
    auto ok = [&](const Int& v) {
      Rational d = Rational(v) - c;
      return qii * d * d <= budget;
    };
    Int mid = floor_int(c + Rational(1, 2));
    if (!ok(mid)) return;
    long double s = std::sqrt(static_cast<long double>(budget / qii));
    long double cl = static_cast<long double>(c);
    Int lo = Int(static_cast<long long>(std::floor(cl - s)));
    Int hi = Int(static_cast<long long>(std::ceil(cl + s)));
    if (lo > mid) lo = mid;
    if (hi < mid) hi = mid;
    while (ok(lo - 1)) --lo;
    while (!ok(lo)) ++lo;
    while (ok(hi + 1)) ++hi;
    while (!ok(hi)) --hi;
    for (Int v = lo; v <= hi; ++v) {
      x[i] = v;
      Rational d = Rational(v) - c;
      Rational rest = budget - qii * d * d;
      if (i == 0) {
        if (!is_zero(x)) out.push_back(x);
      } else {
        recurse(i - 1, rest);
      }
    }
    x[i] = 0;
  };
  recurse(n - 1, B);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> enumerate_norm_vectors(const Lattice& l, const Rational& n) {
  const std::size_t r = l.rank();
  std::vector<RatVec> q;
  IntMatrix qform;
  Rational target;
  if (r == 0) return n == 0 ? std::vector<IntVec>{IntVec{}} : std::vector<IntVec>{};
  if (quadratic_completion(-l.gram(), q)) {
    qform = -l.gram();
    target = -n / l.scale();
  } else if (quadratic_completion(l.gram(), q)) {
    qform = l.gram();
    target = n / l.scale();
  } else {
    throw InvalidInput("enumeration requires definite lattice");
  }
  if (target < 0 || denominator(target) != 1) return {};
  if (target == 0) return {IntVec(r)};
  Int t = numerator(target);
  std::vector<IntVec> out;
  for (auto& v : short_vectors(qform, t))
    if (dot(v * qform, v) == t) out.push_back(std::move(v));
  return out;
}

// ---------------------------------------------------------------- signature

namespace {

// Congruence diagonalization: rows of P satisfy P * G * P^T diagonal.
void diagonalize(const IntMatrix& gram, std::vector<RatVec>& P, RatVec& diag) {
  const std::size_t n = gram.rows();
  std::vector<RatVec> a(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram(i, j));
  P.assign(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
  auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t j = 0; j < n; ++j) a[j][dst] += f * a[j][src];
    for (std::size_t j = 0; j < n; ++j) P[dst][j] += f * P[src][j];
  };
  auto swap_idx = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    std::swap(a[x], a[y]);
    for (std::size_t j = 0; j < n; ++j) std::swap(a[j][x], a[j][y]);
    std::swap(P[x], P[y]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      bool found = false;
      for (std::size_t x = i; x < n && !found; ++x)
        for (std::size_t y = x + 1; y < n && !found; ++y)
          if (a[x][y] != 0) {
            add_row_col(x, y, 1);
            p = x;
            found = true;
          }
      if (!found) break;
    }
    swap_idx(i, p);
    for (std::size_t j = i + 1; j < n; ++j)
      if (a[j][i] != 0) add_row_col(j, i, -a[j][i] / a[i][i]);
  }
  diag.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i][i];
}

}  // namespace

Signature signature(const IntMatrix& gram) {
  std::vector<RatVec> P;
  RatVec d;
  diagonalize(gram, P, d);
  Signature s;
  for (const auto& x : d) {
    if (x > 0) ++s.positive;
    else if (x < 0) ++s.negative;
    else ++s.zero;
  }
  return s;
}

std::optional<IntVec> positive_vector(const IntMatrix& gram) {
  std::vector<RatVec> P;
  RatVec d;
  diagonalize(gram, P, d);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) continue;
    Int den = 1;
    for (const auto& x : P[i]) den = boost::multiprecision::lcm(den, denominator(x));
    IntVec v(P[i].size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = numerator(P[i][j] * Rational(den));
    return primitive_part(v);
  }
  return std::nullopt;
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g < 0 ? Int(-g) : g;
}

IntVec primitive_part(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) return v;
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace enriques
