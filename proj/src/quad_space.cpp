#include "enriques/quad_space.hpp"

#include <algorithm>
#include <utility>

#include "enriques/errors.hpp"

namespace enriques {

namespace {

int lowest_bit(Word x) { return __builtin_ctz(x); }

}  // namespace

// ---------------------------------------------------------------- F2 linear algebra

std::vector<Word> f2_echelon(std::vector<Word> vs) {
  std::vector<Word> basis;
  for (Word v : vs) {
    v = f2_reduce(basis, v);
    if (!v) continue;
    const Word bit = Word(1) << lowest_bit(v);
    for (auto& b : basis)
      if (b & bit) b ^= v;
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(),
            [](Word a, Word b) { return lowest_bit(a) < lowest_bit(b); });
  return basis;
}

int f2_rank(const std::vector<Word>& vs) { return static_cast<int>(f2_echelon(vs).size()); }

Word f2_reduce(const std::vector<Word>& basis, Word x) {
  for (Word b : basis)
    if (x & (Word(1) << lowest_bit(b))) x ^= b;
  return x;
}

bool f2_in_span(const std::vector<Word>& basis, Word x) { return f2_reduce(basis, x) == 0; }

std::vector<Word> f2_span_elements(const std::vector<Word>& basis) {
  std::vector<Word> out{0};
  for (Word b : basis) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> f2_kernel(const std::vector<Word>& rows, int dim) {
  std::vector<Word> ech = f2_echelon(rows);
  Word pivots = 0;
  for (Word r : ech) pivots |= Word(1) << lowest_bit(r);
  std::vector<Word> out;
  for (int f = 0; f < dim; ++f) {
    if (pivots & (Word(1) << f)) continue;
    Word x = Word(1) << f;
    for (Word r : ech)
      if (r & (Word(1) << f)) x |= Word(1) << lowest_bit(r);
    out.push_back(x);
  }
  return out;
}

bool f2_coordinates(const std::vector<Word>& basis, Word x, Word& coords) {
  std::vector<std::pair<Word, Word>> ech;  // (vector, combination)
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Word v = basis[i], c = Word(1) << i;
    for (auto& [w, wc] : ech)
      if (v & (Word(1) << lowest_bit(w))) v ^= w, c ^= wc;
    if (!v) throw InvalidInput("basis vectors are linearly dependent");
    ech.emplace_back(v, c);
  }
  coords = 0;
  for (auto& [w, wc] : ech)
    if (x & (Word(1) << lowest_bit(w))) x ^= w, coords ^= wc;
  return x == 0;
}

// ---------------------------------------------------------------- normal form label

std::string NormalFormF2::str() const {
  std::string s;
  auto part = [&](const std::string& p, int n) {
    if (n == 0) return;
    if (!s.empty()) s += "+";
    s += p;
    if (n > 1) s += "^" + std::to_string(n);
  };
  part("U2", u);
  part("V2", v);
  part("[1]", e);
  part("[0]", k);
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- QuadSpaceF2

QuadSpaceF2::QuadSpaceF2(int dim, std::vector<Word> rows, Word qdiag)
    : dim_(dim), rows_(std::move(rows)), qdiag_(qdiag) {
  if (dim < 0 || dim > kMaxF2Dim) throw InvalidInput("F2 dimension out of range");
  if (static_cast<int>(rows_.size()) != dim) throw InvalidInput("bilinear matrix has wrong size");
  const Word m = mask();
  if (qdiag_ & ~m) throw InvalidInput("quadratic diagonal has bits beyond dimension");
  for (int i = 0; i < dim; ++i) {
    if (rows_[i] & ~m) throw InvalidInput("bilinear row has bits beyond dimension");
    if (rows_[i] >> i & 1) throw InvalidInput("bilinear form must have zero diagonal");
    for (int j = 0; j < dim; ++j)
      if ((rows_[i] >> j & 1) != (rows_[j] >> i & 1)) throw InvalidInput("bilinear form must be symmetric");
  }
}

QuadSpaceF2 QuadSpaceF2::from_even_gram(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw InvalidInput("gram matrix must be symmetric");
  const int n = static_cast<int>(gram.rows());
  std::vector<Word> rows(n, 0);
  Word qd = 0;
  for (int i = 0; i < n; ++i) {
    if (gram(i, i) % 2 != 0) throw InvalidInput("gram matrix must be even");
    Int half = gram(i, i) / 2;
    if (half % 2 != 0) qd |= Word(1) << i;
    for (int j = 0; j < n; ++j)
      if (i != j && gram(i, j) % 2 != 0) rows[i] |= Word(1) << j;
  }
  return QuadSpaceF2(n, rows, qd);
}

QuadSpaceF2 QuadSpaceF2::U2() { return QuadSpaceF2(2, {2, 1}, 0); }
QuadSpaceF2 QuadSpaceF2::V2() { return QuadSpaceF2(2, {2, 1}, 3); }
QuadSpaceF2 QuadSpaceF2::one() { return QuadSpaceF2(1, {0}, 1); }
QuadSpaceF2 QuadSpaceF2::zero() { return QuadSpaceF2(1, {0}, 0); }

QuadSpaceF2 QuadSpaceF2::direct_sum(const QuadSpaceF2& a, const QuadSpaceF2& b) {
  std::vector<Word> rows = a.rows_;
  for (Word r : b.rows_) rows.push_back(r << a.dim_);
  return QuadSpaceF2(a.dim_ + b.dim_, rows, a.qdiag_ | (b.qdiag_ << a.dim_));
}

QuadSpaceF2 QuadSpaceF2::from_normal_form(const NormalFormF2& nf) {
  QuadSpaceF2 s(0, {}, 0);
  for (int i = 0; i < nf.u; ++i) s = direct_sum(s, U2());
  for (int i = 0; i < nf.v; ++i) s = direct_sum(s, V2());
  for (int i = 0; i < nf.e; ++i) s = direct_sum(s, one());
  for (int i = 0; i < nf.k; ++i) s = direct_sum(s, zero());
  return s;
}

Word QuadSpaceF2::polar(Word x) const {
  Word out = 0;
  for (int i = 0; i < dim_; ++i)
    if (parity(rows_[i] & x)) out |= Word(1) << i;
  return out;
}

int QuadSpaceF2::b(Word x, Word y) const { return parity(x & polar(y)); }

int QuadSpaceF2::q(Word x) const {
  int r = parity(x & qdiag_);
  for (Word y = x; y; y &= y - 1) {
    const int i = lowest_bit(y);
    r ^= parity(rows_[i] & x & ~low_mask(i + 1));
  }
  return r;
}

QuadSpaceF2 QuadSpaceF2::restrict_to(const std::vector<Word>& basis) const {
  const int k = static_cast<int>(basis.size());
  std::vector<Word> rows(k, 0);
  Word qd = 0;
  for (int i = 0; i < k; ++i) {
    if (q(basis[i])) qd |= Word(1) << i;
    for (int j = 0; j < k; ++j)
      if (i != j && b(basis[i], basis[j])) rows[i] |= Word(1) << j;
  }
  return QuadSpaceF2(k, rows, qd);
}

// ---------------------------------------------------------------- IsometryF2

IsometryF2 IsometryF2::identity(int dim) {
  IsometryF2 g{dim, std::vector<Word>(dim)};
  for (int i = 0; i < dim; ++i) g.images[i] = Word(1) << i;
  return g;
}

IsometryF2 IsometryF2::from_basis_images(int dim, const std::vector<Word>& basis,
                                         const std::vector<Word>& targets) {
  if (static_cast<int>(basis.size()) != dim || targets.size() != basis.size())
    throw InvalidInput("basis does not span the space");
  IsometryF2 g{dim, std::vector<Word>(dim)};
  for (int j = 0; j < dim; ++j) {
    Word c;
    if (!f2_coordinates(basis, Word(1) << j, c)) throw InvalidInput("basis does not span the space");
    Word img = 0;
    for (int i = 0; i < dim; ++i)
      if (c >> i & 1) img ^= targets[i];
    g.images[j] = img;
  }
  return g;
}

Word IsometryF2::apply(Word x) const {
  Word out = 0;
  for (; x; x &= x - 1) out ^= images[lowest_bit(x)];
  return out;
}

IsometryF2 IsometryF2::then(const IsometryF2& other) const {
  IsometryF2 g{dim, std::vector<Word>(dim)};
  for (int i = 0; i < dim; ++i) g.images[i] = other.apply(images[i]);
  return g;
}

bool IsometryF2::invertible() const { return f2_rank(images) == dim; }

IsometryF2 IsometryF2::inverse() const {
  IsometryF2 id = identity(dim);
  std::vector<Word> targets = id.images;
  // this maps e_i -> images[i], so the inverse maps images[i] -> e_i.
  return from_basis_images(dim, images, targets);
}

bool IsometryF2::is_identity() const {
  for (int i = 0; i < dim; ++i)
    if (images[i] != (Word(1) << i)) return false;
  return true;
}

bool IsometryF2::preserves(const QuadSpaceF2& V) const {
  if (dim != V.dim() || !invertible()) return false;
  for (int i = 0; i < dim; ++i) {
    if (V.q(images[i]) != V.q(Word(1) << i)) return false;
    for (int j = i + 1; j < dim; ++j)
      if (V.b(images[i], images[j]) != V.b(Word(1) << i, Word(1) << j)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- radicals

namespace {

void check_subspace(const QuadSpaceF2& V, const std::vector<Word>& W) {
  for (Word w : W)
    if (w & ~V.mask()) throw InvalidInput("vector is not in the ambient space");
  if (f2_rank(W) != static_cast<int>(W.size()))
    throw InvalidInput("subspace basis is not linearly independent");
}

Word combine(const std::vector<Word>& basis, Word coords) {
  Word x = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coords >> i & 1) x ^= basis[i];
  return x;
}

}  // namespace

std::vector<Word> orthogonal_subspace(const QuadSpaceF2& V, const std::vector<Word>& W) {
  std::vector<Word> rows;
  for (Word w : W) rows.push_back(V.polar(w));
  return f2_echelon(f2_kernel(rows, V.dim()));
}

Radicals radicals(const QuadSpaceF2& V, const std::vector<Word>& W) {
  check_subspace(V, W);
  QuadSpaceF2 ws = V.restrict_to(W);
  std::vector<Word> rb;
  for (Word c : f2_kernel(ws.bilinear_rows(), ws.dim())) rb.push_back(combine(W, c));
  rb = f2_echelon(rb);
  std::vector<Word> rq;
  auto it = std::find_if(rb.begin(), rb.end(), [&](Word z) { return V.q(z) == 1; });
  if (it == rb.end()) {
    rq = rb;
  } else {
    const Word r = *it;
    for (Word z : rb)
      if (z != r) rq.push_back(V.q(z) ? z ^ r : z);
  }
  return Radicals{rb, f2_echelon(rq)};
}

// ---------------------------------------------------------------- normal form

NormalFormWitness normal_form_witness(const QuadSpaceF2& V) {
  const int n = V.dim();
  std::vector<Word> rad = f2_echelon(f2_kernel(V.bilinear_rows(), n));
  std::vector<Word> span = rad, C;
  for (int i = 0; i < n; ++i) {
    const Word e = Word(1) << i;
    if (f2_in_span(span, e)) continue;
    C.push_back(e);
    span = f2_echelon([&] { auto s = span; s.push_back(e); return s; }());
  }

  std::vector<std::pair<Word, Word>> pairs;
  std::vector<Word> aniso;
  while (!C.empty()) {
    const Word count = Word(1) << C.size();
    Word x = 0;
    for (Word c = 1; c < count; ++c) {
      Word cand = combine(C, c);
      if (V.q(cand) == 0) {
        x = cand;
        break;
      }
    }
    if (!x) {
      if (C.size() != 2) throw InternalError("anisotropic regular space of unexpected dimension");
      aniso = C;
      break;
    }
    Word y = 0;
    for (Word c : C)
      if (V.b(x, c)) {
        y = c;
        break;
      }
    if (!y) throw InternalError("complement of the radical is degenerate");
    if (V.q(y)) y ^= x;
    pairs.emplace_back(x, y);
    std::vector<Word> next;
    for (Word c : C) {
      Word p = c;
      if (V.b(c, y)) p ^= x;
      if (V.b(c, x)) p ^= y;
      next.push_back(p);
    }
    C = f2_echelon(next);
  }

  Word r = 0;
  std::vector<Word> zs;
  for (Word z : rad)
    if (V.q(z) == 1 && !r) r = z;
  for (Word z : rad)
    if (z != r) zs.push_back(V.q(z) ? z ^ r : z);
  if (r && !aniso.empty()) {
    pairs.emplace_back(aniso[0] ^ r, aniso[1] ^ r);
    aniso.clear();
  }

  NormalFormWitness w;
  w.form = NormalFormF2{static_cast<int>(pairs.size()), aniso.empty() ? 0 : 1, r ? 1 : 0,
                        static_cast<int>(zs.size())};
  for (auto [x, y] : pairs) {
    w.basis.push_back(x);
    w.basis.push_back(y);
  }
  for (Word a : aniso) w.basis.push_back(a);
  if (r) w.basis.push_back(r);
  for (Word z : zs) w.basis.push_back(z);
  return w;
}

NormalFormF2 normal_form(const QuadSpaceF2& V) { return normal_form_witness(V).form; }

IsometryF2 transvection(const QuadSpaceF2& V, Word v) {
  if ((v & ~V.mask()) != 0) throw InvalidInput("vector is not in the ambient space");
  if (V.q(v) != 1) throw InvalidInput("transvection requires anisotropic vector");
  IsometryF2 g = IsometryF2::identity(V.dim());
  for (int i = 0; i < V.dim(); ++i)
    if (V.b(Word(1) << i, v)) g.images[i] ^= v;
  return g;
}

}  // namespace enriques
