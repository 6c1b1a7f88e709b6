#include "enriques/invariant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "enriques/errors.hpp"

namespace enriques {

namespace {

constexpr std::size_t kMaxMinusRank = 12;

struct GlueData {
  std::size_t n = 0;
  std::vector<Word> minus_mod2;  // 2m mod 2 for each glue class
  std::vector<Word> combined;    // minus_mod2 | plus << n, echelonized
};

Rational form(const IntMatrix& g, const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * Rational(g(i, j)) * b[j];
  }
  return s;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

GlueData validate(const GluedK3Input& in) {
  const IntMatrix& g = in.gram_minus;
  if (!g.is_symmetric()) throw InvalidInput("gram_minus must be square and symmetric");
  const std::size_t n = g.rows();
  if (n > kMaxMinusRank) throw InvalidInput("anti-invariant lattice has rank above 12");
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i) % 2 != 0) throw InvalidInput("anti-invariant lattice must be even");
  Lattice L(g);
  if (n > 0 && signature(g).negative != static_cast<int>(n))
    throw InvalidInput("anti-invariant lattice must be negative definite");
  if (!enumerate_norm_vectors(L, Rational(-2)).empty()) throw InvalidInput("invalid anti-invariant lattice");

  const IntMatrix& e = e10::gram();
  GlueData d;
  d.n = n;
  std::vector<Word> plus;
  for (const auto& c : in.glue) {
    if (c.minus.size() != n) throw InvalidInput("glue class has wrong length");
    if (c.plus & ~low_mask(e10::kRank)) throw InvalidInput("glue plus class must have 10 coordinates");
    Word a = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational twice = 2 * c.minus[i];
      if (!is_integer(twice)) throw InvalidInput("glue class must have order at most 2");
      if (numerator(twice) % 2 != 0) a |= Word(1) << i;
      Rational pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += Rational(g(i, j)) * c.minus[j];
      if (!is_integer(pair)) throw InvalidInput("glue class is not in the dual lattice");
    }
    d.minus_mod2.push_back(a);
    plus.push_back(c.plus);
    d.combined.push_back(a | (c.plus << n));
  }
  const int r_minus = f2_rank(d.minus_mod2), r_plus = f2_rank(plus), r_graph = f2_rank(d.combined);
  if (r_graph != r_minus) throw InvalidInput("glue is not a well-defined map");
  if (r_graph != r_plus) throw InvalidInput("glue map is not injective");

  // Anti-isometry on generators: q_- + q_+ in 2Z and b_- + b_+ in Z.
  for (std::size_t i = 0; i < in.glue.size(); ++i) {
    const IntVec xi = lift_mod2(in.glue[i].plus);
    const Rational qp = Rational(dot(xi * e, xi), 2);
    const Rational qm = form(g, in.glue[i].minus, in.glue[i].minus);
    const Rational sq = (qm + qp) / 2;
    if (!is_integer(sq)) throw InvalidInput("glue inconsistent with quadratic forms");
    for (std::size_t j = i + 1; j < in.glue.size(); ++j) {
      const IntVec xj = lift_mod2(in.glue[j].plus);
      const Rational bp = Rational(dot(xi * e, xj), 2);
      const Rational bm = form(g, in.glue[i].minus, in.glue[j].minus);
      if (!is_integer(bp + bm)) throw InvalidInput("glue inconsistent with quadratic forms");
    }
  }
  d.combined = f2_echelon(d.combined);
  return d;
}

// Plus image of a vector whose mod 2 class lies in the span of the minus classes.
bool image_of(const GlueData& d, Word vbar, Word& out) {
  // The echelon basis of the graph has pivots in the low n bits for every
  // vector (the map is well defined), so reducing the low part reduces fully.
  const Word low = low_mask(static_cast<int>(d.n));
  Word x = vbar;
  for (Word r : d.combined)
    if (x & (Word(1) << __builtin_ctz(r))) x ^= r;
  if (x & low) return false;
  out = x >> d.n;
  return true;
}

}  // namespace

SplittingRoots splitting_root_lattice_from_k3(const GluedK3Input& input) {
  GlueData d = validate(input);
  Lattice L(input.gram_minus);
  SplittingRoots out;
  for (auto& v : enumerate_norm_vectors(L, Rational(-4))) {
    Word img;
    if (image_of(d, reduce_mod2(v), img)) out.roots.push_back(v);
  }
  std::vector<IntVec> positive;
  for (const auto& v : out.roots)
    if (is_positive_root(v)) positive.push_back(v);
  out.fundamental = simple_roots(positive);
  out.lattice = Sublattice(Lattice(input.gram_minus, Rational(1, 2)),
                           IntMatrix::from_rows(out.fundamental, input.gram_minus.rows()));
  return out;
}

Word glue_image(const GluedK3Input& input, const IntVec& v) {
  GlueData d = validate(input);
  Word img;
  if (!image_of(d, reduce_mod2(v), img)) throw InvalidInput("vector is not a splitting root");
  return img;
}

int RootInvariant::total_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.type.ade.rank;
  return r;
}

RootInvariant nikulin_root_invariant(const GluedK3Input& input) {
  GlueData d = validate(input);
  SplittingRoots sr = splitting_root_lattice_from_k3(input);
  const QuadSpaceF2& V = e10::mod2();
  const IntMatrix& g = input.gram_minus;
  const std::size_t n = g.rows();

  std::vector<IntVec> positive;
  std::map<Word, IntVec> lift;
  for (const auto& v : sr.roots) {
    if (!is_positive_root(v)) continue;
    Word img = 0;
    image_of(d, reduce_mod2(v), img);
    if (V.q(img) != 1) throw InvalidInput("glue inconsistent with quadratic forms");
    if (!lift.emplace(img, v).second) throw InternalError("positive roots collide modulo 2");
    positive.push_back(v);
  }
  // The glue map must carry the root graph isomorphically onto its image.
  for (auto a = lift.begin(); a != lift.end(); ++a)
    for (auto b = std::next(a); b != lift.end(); ++b) {
      Int half = dot(a->second * g, b->second) / 2;
      if ((half % 2 != 0) != (V.b(a->first, b->first) == 1))
        throw InternalError("glue map does not preserve the root graph");
    }

  std::vector<Word> images;
  for (const auto& [w, v] : lift) images.push_back(w);
  RootInvariant inv;
  for (auto& comp : classify_delta_bar(images)) {
    std::vector<IntVec> roots;
    for (Word w : comp.vertices) roots.push_back(lift.at(w));
    IntMatrix basis = row_span_basis(IntMatrix::from_rows(roots, n));
    Sublattice r_sigma(Lattice(g, Rational(1, 2)), basis);
    RootSublattice rs = root_sublattice(r_sigma.as_lattice());
    IntMatrix f = IntMatrix::from_rows(rs.fundamental, basis.rows());
    ADEMultiset t = recognize_ade(Lattice(f * r_sigma.gram() * f.transpose(), Rational(1, 2)).scaled_gram());
    if (t != ADEMultiset{comp.type.ade}) throw InternalError("component type differs from its lift");

    // ker(R/2R -> R'/2R') with R' the primitive closure in the anti-invariant lattice.
    Sublattice closure = saturate(Sublattice(Lattice(g), basis));
    std::vector<Word> coords;
    for (std::size_t i = 0; i < basis.rows(); ++i) coords.push_back(reduce_mod2(*closure.coordinates(basis.row(i))));
    const int kernel = static_cast<int>(basis.rows()) - f2_rank(coords);
    if (kernel != comp.type.kernel) throw InternalError("kernel computations disagree");

    inv.components.push_back(InvariantComponent{comp.type, comp.vertices});
  }
  return inv;
}

std::vector<std::string> validate_invariant(const RootInvariant& inv) {
  std::vector<std::string> out;
  const QuadSpaceF2& V = e10::mod2();
  for (std::size_t i = 0; i < inv.components.size(); ++i) {
    const auto& c = inv.components[i];
    const std::string tag = "component " + std::to_string(i) + " " + c.type.str() + ": ";
    if (!c.type.ade.valid()) out.push_back(tag + "invalid ADE type");
    if (c.type.ade.rank > 9) out.push_back(tag + "rank <= 9 required");
    if (c.type.kernel < 0 || c.type.kernel > 1) out.push_back(tag + "kernel must be 0 or 1");
    if (c.type.kernel == 1 && c.type.ade != ADEType{Family::A, 7} && c.type.ade != ADEType{Family::D, 8})
      out.push_back(tag + "kernel 1 only for A7/D8");
    if (c.sigma.empty()) continue;
    bool q_ok = true;
    for (Word w : c.sigma)
      if ((w & ~V.mask()) || V.q(w) != 1) q_ok = false;
    if (!q_ok) {
      out.push_back(tag + "sigma vertices must satisfy q = 1");
      continue;
    }
    try {
      auto comps = classify_delta_bar(c.sigma);
      if (comps.size() != 1 || comps[0].type != c.type) out.push_back(tag + "sigma does not match the component type");
    } catch (const InvalidInput&) {
      out.push_back(tag + "sigma is not the graph of a positive root system");
    }
    for (std::size_t j = 0; j < i; ++j)
      for (Word a : inv.components[j].sigma)
        for (Word b : c.sigma)
          if (a == b || V.b(a, b)) {
            out.push_back(tag + "sigma is not separated from component " + std::to_string(j));
            goto next_component;
          }
  next_component:;
  }
  if (inv.total_rank() > 12) out.push_back("total rank <= 12 required");
  return out;
}

}  // namespace enriques
