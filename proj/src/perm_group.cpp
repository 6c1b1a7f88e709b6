#include "enriques/perm_group.hpp"

#include <algorithm>

#include "enriques/errors.hpp"

namespace enriques {

PermGroup::Elem PermGroup::identity() const {
  Elem e{};
  for (int i = 0; i < dim_; ++i) e[i] = Word(1) << i;
  return e;
}

Word PermGroup::apply(const Elem& g, Word x) const {
  Word out = 0;
  for (; x; x &= x - 1) out ^= g[__builtin_ctz(x)];
  return out;
}

PermGroup::Elem PermGroup::mul(const Elem& a, const Elem& b) const {
  Elem c{};
  for (int i = 0; i < dim_; ++i) c[i] = apply(b, a[i]);
  return c;
}

PermGroup::Elem PermGroup::inv(const Elem& g) const {
  IsometryF2 f{dim_, std::vector<Word>(g.begin(), g.begin() + dim_)};
  return to_elem(f.inverse());
}

bool PermGroup::is_identity(const Elem& g) const {
  for (int i = 0; i < dim_; ++i)
    if (g[i] != (Word(1) << i)) return false;
  return true;
}

PermGroup::Elem PermGroup::to_elem(const IsometryF2& g) const {
  if (g.dim != dim_ || static_cast<int>(g.images.size()) != dim_)
    throw InvalidInput("generator has wrong dimension");
  Elem e{};
  for (int i = 0; i < dim_; ++i) e[i] = g.images[i];
  return e;
}

PermGroup::PermGroup(int dim, const std::vector<IsometryF2>& generators,
                     const std::vector<Word>& base_prefix)
    : dim_(dim) {
  if (dim < 0 || dim > kMaxGroupDim) throw InvalidInput("dimension exceeds group engine bound");
  const Word m = low_mask(dim);
  for (Word w : base_prefix)
    if (w == 0 || (w & ~m)) throw InvalidInput("base point is not a nonzero vector of the space");
  if (f2_rank(base_prefix) != static_cast<int>(base_prefix.size()))
    throw InvalidInput("base prefix is not linearly independent");
  base_ = base_prefix;
  for (int i = 0; i < dim; ++i) {
    const Word e = Word(1) << i;
    if (!f2_in_span(f2_echelon(base_), e)) base_.push_back(e);
  }
  levels_.resize(base_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    Level& L = levels_[l];
    L.point = base_[l];
    L.pos.assign(std::size_t(1) << dim, -1);
    L.orbit = {L.point};
    L.pos[L.point] = 0;
    L.transversal = {identity()};
    L.transversal_inv = {identity()};
  }
  for (const auto& g : generators) {
    if (!g.invertible()) throw InvalidInput("non-invertible generator");
    Elem e = to_elem(g);
    if (is_identity(e) || contains(g)) continue;
    generators_.push_back(g);
    add_strong(e, first_moved(e));
    complete();
  }
}

std::size_t PermGroup::first_moved(const Elem& g) const {
  for (std::size_t l = 0; l < base_.size(); ++l)
    if (apply(g, base_[l]) != base_[l]) return l;
  return base_.size();
}

std::pair<std::size_t, PermGroup::Elem> PermGroup::strip(Elem g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const int k = L.pos[apply(g, L.point)];
    if (k < 0) return {l, g};
    g = mul(g, L.transversal_inv[k]);
  }
  return {levels_.size(), g};
}

void PermGroup::add_strong(const Elem& g, std::size_t upto) {
  strong_.push_back(g);
  const std::size_t idx = strong_.size() - 1;
  for (std::size_t l = 0; l <= upto && l < levels_.size(); ++l) levels_[l].gens.push_back(idx);
}

void PermGroup::update_orbit(std::size_t level) {
  Level& L = levels_[level];
  for (std::size_t k = 0; k < L.orbit.size(); ++k)
    for (std::size_t s : L.gens) {
      const Word img = apply(strong_[s], L.orbit[k]);
      if (L.pos[img] >= 0) continue;
      L.pos[img] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(img);
      Elem u = mul(L.transversal[k], strong_[s]);
      L.transversal.push_back(u);
      L.transversal_inv.push_back(inv(u));
    }
}

void PermGroup::complete() {
  const std::size_t m = levels_.size();
  std::size_t i = m;
  while (i > 0) {
    const std::size_t l = i - 1;
    update_orbit(l);
    Level& L = levels_[l];
    L.tested.resize(L.orbit.size());
    bool restarted = false;
    for (std::size_t k = 0; k < L.orbit.size() && !restarted; ++k) {
      L.tested[k].resize(L.gens.size(), 0);
      for (std::size_t si = 0; si < L.gens.size(); ++si) {
        if (L.tested[k][si]) continue;
        L.tested[k][si] = 1;
        const Elem& s = strong_[L.gens[si]];
        const Word img = apply(s, L.orbit[k]);
        Elem h = mul(mul(L.transversal[k], s), L.transversal_inv[L.pos[img]]);
        auto [j, r] = strip(h, l + 1);
        if (is_identity(r)) continue;
        if (j == m) throw InternalError("nontrivial element fixes a basis");
        add_strong(r, j);
        i = j + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& L : levels_) s.push_back(L.orbit.size());
  return s;
}

Int PermGroup::order() const { return stabilizer_order(0); }

Int PermGroup::stabilizer_order(std::size_t levels) const {
  Int o = 1;
  for (std::size_t l = levels; l < levels_.size(); ++l) o *= levels_[l].orbit.size();
  return o;
}

bool PermGroup::contains(const IsometryF2& g) const {
  if (g.dim != dim_ || !g.invertible()) return false;
  return is_identity(strip(to_elem(g), 0).second);
}

Int group_order(const PermGroup& G) { return G.order(); }

// ---------------------------------------------------------------- orthogonal groups

std::vector<IsometryF2> orthogonal_group_generators(const QuadSpaceF2& V) {
  const int n = V.dim();
  if (n > kMaxGroupDim) throw InvalidInput("dimension exceeds group engine bound");
  NormalFormWitness w = normal_form_witness(V);
  const auto& B = w.basis;
  const int n1 = 2 * w.form.u + 2 * w.form.v + w.form.e;
  std::vector<Word> v1(B.begin(), B.begin() + n1), z(B.begin() + n1, B.end());

  std::vector<IsometryF2> gens;
  for (Word c = 1; c < (Word(1) << n1); ++c) {
    Word x = 0;
    for (int i = 0; i < n1; ++i)
      if (c >> i & 1) x ^= v1[i];
    if (V.q(x) == 1) gens.push_back(transvection(V, x));
  }
  auto basis_map = [&](auto edit) {
    std::vector<Word> t = B;
    edit(t);
    return IsometryF2::from_basis_images(n, B, t);
  };
  if (w.form.e == 0 && w.form.v == 0 && w.form.u == 2) {
    // Transvections generate a subgroup of index 2 in O(U2 + U2).
    gens.push_back(basis_map([](std::vector<Word>& t) {
      std::swap(t[0], t[2]);
      std::swap(t[1], t[3]);
    }));
  }
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      if (i != j) gens.push_back(basis_map([&](std::vector<Word>& t) { t[n1 + i] ^= z[j]; }));
  for (int a = 0; a < n1; ++a)
    for (Word zz : z) gens.push_back(basis_map([&](std::vector<Word>& t) { t[a] ^= zz; }));
  return gens;
}

PermGroup orthogonal_group(const QuadSpaceF2& V) {
  return PermGroup(V.dim(), orthogonal_group_generators(V));
}

namespace {

void require_regular(const QuadSpaceF2& V) {
  if (!f2_kernel(V.bilinear_rows(), V.dim()).empty()) throw InvalidInput("space is not regular");
}

}  // namespace

Int pointwise_stabilizer_order(const QuadSpaceF2& V, const std::vector<Word>& W) {
  require_regular(V);
  radicals(V, W);  // validates W
  PermGroup O = orthogonal_group(V);
  if (W.empty()) return O.order();
  PermGroup S(V.dim(), O.generators(), W);
  return S.stabilizer_order(W.size());
}

Int stabilizer_order_formula(const QuadSpaceF2& V, const std::vector<Word>& W) {
  require_regular(V);
  Radicals rad = radicals(V, W);
  std::vector<Word> perp = orthogonal_subspace(V, W);
  const long long w = static_cast<long long>(perp.size());
  const long long n = static_cast<long long>(rad.rad_b.size());
  const long long k = static_cast<long long>(rad.rad_q.size());

  std::vector<Word> kq = f2_echelon(rad.rad_q), spanned = kq, complement;
  for (Word x : perp) {
    if (f2_in_span(spanned, x)) continue;
    complement.push_back(x);
    spanned.push_back(x);
    spanned = f2_echelon(spanned);
  }
  QuadSpaceF2 quotient = V.restrict_to(complement);
  Int order = orthogonal_group(quotient).order();
  const long long e = n * (n - 1) / 2 + k * (w - n) + n - k;
  return order * (Int(1) << e);
}

std::vector<std::vector<Word>> vector_orbits(const std::vector<IsometryF2>& generators,
                                             const QuadSpaceF2& V) {
  const Word m = V.mask();
  std::vector<char> seen(std::size_t(m) + 1, 0);
  std::vector<std::vector<Word>> out;
  for (Word x = 1; x <= m && x != 0; ++x) {
    if (seen[x]) continue;
    std::vector<Word> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : generators) {
        const Word y = g.apply(orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<Word>> vector_orbits(const PermGroup& G, const QuadSpaceF2& V) {
  if (G.dim() != V.dim()) throw InvalidInput("group and space dimensions differ");
  return vector_orbits(G.generators(), V);
}

}  // namespace enriques
