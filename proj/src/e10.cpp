#include "enriques/e10.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "enriques/errors.hpp"

namespace enriques {

namespace e10 {

const IntMatrix& gram() {
  static const IntMatrix g = [] {
    IntMatrix m(kRank, kRank);
    for (int i = 0; i < kRank; ++i) m(i, i) = -2;
    for (int i = 0; i + 1 < 9; ++i) m(i, i + 1) = m(i + 1, i) = 1;
    m(6, 9) = m(9, 6) = 1;
    return m;
  }();
  return g;
}

const Lattice& lattice() {
  static const Lattice l(gram());
  return l;
}

const QuadSpaceF2& mod2() {
  static const QuadSpaceF2 v = QuadSpaceF2::from_even_gram(gram());
  return v;
}

IntVec basis_vector(int i) {
  if (i < 1 || i > kRank) throw InvalidInput("E10 basis index out of range");
  IntVec v(kRank);
  v[i - 1] = 1;
  return v;
}

Sublattice span(const std::vector<IntVec>& vectors) {
  IntMatrix m = IntMatrix::from_rows(vectors, kRank);
  IntMatrix b = row_span_basis(m);
  return Sublattice(lattice(), b);
}

IntVec e11() { return int_vec({0, 0, 0, -1, -2, -3, -4, -3, -2, -2}); }
IntVec f1() { return int_vec({0, 1, 2, 3, 4, 5, 6, 4, 2, 3}); }
IntVec f2() { return int_vec({1, 2, 4, 6, 8, 10, 12, 8, 5, 6}); }
IntVec d1() { return int_vec({0, 0, -2, -3, -4, -5, -6, -4, -2, -3}); }

std::vector<IntVec> a7_e7_configuration() {
  std::vector<IntVec> v;
  for (int i = 4; i <= 9; ++i) v.push_back(basis_vector(i));
  v.push_back(e11());
  return v;
}

std::vector<IntVec> a8_e8_configuration() {
  std::vector<IntVec> v{d1()};
  for (int i = 3; i <= 9; ++i) v.push_back(basis_vector(i));
  return v;
}

std::vector<IntVec> d8_e8_configuration() {
  std::vector<IntVec> v{d1()};
  for (int i = 3; i <= 8; ++i) v.push_back(basis_vector(i));
  v.push_back(basis_vector(10));
  return v;
}

std::vector<IntVec> configuration(const ConfigType& c) {
  if (c.inner.size() != 1 || c.closure.size() != 1) return {};
  const ADEType t = c.inner[0];
  const ADEType t2 = c.closure[0];
  auto range = [](std::initializer_list<int> idx) {
    std::vector<IntVec> v;
    for (int i : idx) v.push_back(basis_vector(i));
    return v;
  };
  if (t != t2) {
    if (t == ADEType{Family::A, 7} && t2 == ADEType{Family::E, 7}) return a7_e7_configuration();
    if (t == ADEType{Family::A, 8} && t2 == ADEType{Family::E, 8}) return a8_e8_configuration();
    if (t == ADEType{Family::D, 8} && t2 == ADEType{Family::E, 8}) return d8_e8_configuration();
    return {};
  }
  switch (t.family) {
    case Family::A: {
      if (t.rank > 9) return {};
      std::vector<IntVec> v;
      for (int i = 1; i <= t.rank; ++i) v.push_back(basis_vector(i));
      return v;
    }
    case Family::D: {
      if (t.rank > 9) return {};
      std::vector<IntVec> v = range({8, 10});
      for (int i = 7; i >= 10 - t.rank; --i) v.push_back(basis_vector(i));
      return v;
    }
    case Family::E:
      if (t.rank == 6) return range({5, 6, 7, 8, 9, 10});
      if (t.rank == 7) return range({4, 5, 6, 7, 8, 9, 10});
      return range({3, 4, 5, 6, 7, 8, 9, 10});
  }
  return {};
}

std::vector<IntVec> roots_in_span(const std::vector<IntVec>& generators) {
  if (generators.empty()) return {};
  Sublattice s = span(generators);
  std::vector<IntVec> out;
  for (const auto& c : enumerate_norm_vectors(s.as_lattice(), Rational(-2))) out.push_back(s.to_ambient(c));
  std::sort(out.begin(), out.end());
  return out;
}

IntVec reflect(const IntVec& x, const IntVec& r) {
  return add(x, scale(r, lattice().raw_inner(x, r)));
}

}  // namespace e10

std::string ComponentType::str() const {
  return "(" + ade.str() + "," + (kernel ? "Z/2" : "0") + ")";
}

Word reduce_mod2(const IntVec& x) {
  if (x.size() > static_cast<std::size_t>(kMaxF2Dim)) throw InvalidInput("vector too long for F2 packing");
  Word w = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] % 2 != 0) w |= Word(1) << i;
  return w;
}

IntVec lift_mod2(Word w) {
  IntVec v(e10::kRank);
  for (int i = 0; i < e10::kRank; ++i) v[i] = (w >> i) & 1;
  return v;
}

// ---------------------------------------------------------------- Delta-bar graphs

namespace {

ADEType type_from_graph_invariants(std::size_t vertices, std::size_t degree) {
  const std::string err = "invalid component";
  if ((degree + 4) % 2 != 0) throw InvalidInput(err);
  const std::size_t h = (degree + 4) / 2;
  if ((2 * vertices) % h != 0) throw InvalidInput(err);
  const int r = static_cast<int>(2 * vertices / h);
  const int hh = static_cast<int>(h);
  if (hh == r + 1) return ADEType{Family::A, r};
  if (r >= 4 && hh == 2 * r - 2) return ADEType{Family::D, r};
  if (r == 6 && hh == 12) return ADEType{Family::E, 6};
  if (r == 7 && hh == 18) return ADEType{Family::E, 7};
  if (r == 8 && hh == 30) return ADEType{Family::E, 8};
  throw InvalidInput(err);
}

}  // namespace

std::vector<DeltaComponent> classify_delta_bar(const std::vector<Word>& input) {
  const QuadSpaceF2& V = e10::mod2();
  std::vector<Word> verts(input);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (Word v : verts)
    if ((v & ~V.mask()) || V.q(v) != 1) throw InvalidInput("vertex must satisfy q = 1");

  std::vector<DeltaComponent> out;
  std::set<Word> seen;
  for (Word s : verts) {
    if (seen.count(s)) continue;
    std::vector<Word> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Word t : verts)
        if (!seen.count(t) && V.b(comp[i], t)) {
          seen.insert(t);
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    std::set<Word> members(comp.begin(), comp.end());
    std::size_t degree = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::size_t d = 0;
      for (Word t : comp)
        if (V.b(comp[i], t)) {
          ++d;
          if (!members.count(comp[i] ^ t)) throw InvalidInput("invalid component");
        }
      if (i == 0) degree = d;
      else if (d != degree) throw InvalidInput("invalid component");
    }
    DeltaComponent dc;
    dc.type.ade = type_from_graph_invariants(comp.size(), degree);
    if (root_count(dc.type.ade) != 2 * comp.size()) throw InvalidInput("invalid component");
    dc.dimension = f2_rank(comp);
    dc.type.kernel = dc.type.ade.rank - dc.dimension;
    dc.vertices = std::move(comp);
    out.push_back(std::move(dc));
  }
  return out;
}

std::vector<DeltaComponent> delta_bar_components(const std::vector<IntVec>& roots) {
  const Lattice& L = e10::lattice();
  std::vector<Word> images;
  for (const auto& r : roots) {
    if (L.raw_inner(r, r) != -2) throw InvalidInput("expected vectors of norm -2");
    images.push_back(reduce_mod2(r));
  }
  std::vector<DeltaComponent> comps = classify_delta_bar(images);
  for (const auto& c : comps) {
    std::set<Word> members(c.vertices.begin(), c.vertices.end());
    std::vector<IntVec> lifted;
    for (const auto& r : roots)
      if (members.count(reduce_mod2(r))) lifted.push_back(r);
    Sublattice s = e10::span(lifted);
    RootSublattice rs = root_sublattice(s.as_lattice());
    ADEMultiset lift_type = recognize_ade(
        [&] {
          IntMatrix f = IntMatrix::from_rows(rs.fundamental, s.rank());
          return f * s.gram() * f.transpose();
        }());
    if (lift_type != ADEMultiset{c.type.ade} || rs.roots.size() != 2 * c.vertices.size())
      throw InvalidInput("invalid component");
  }
  return comps;
}

// ---------------------------------------------------------------- Table of mod 2 forms

const std::vector<TableRow>& expected_table_root_mod2() {
  static const std::vector<TableRow> rows = {
      {"A1", "A1", {0, 0, 1, 0}},  {"A2", "A2", {0, 1, 0, 0}},  {"A3", "A3", {0, 1, 0, 1}},
      {"A4", "A4", {1, 1, 0, 0}},  {"A5", "A5", {2, 0, 1, 0}},  {"A6", "A6", {3, 0, 0, 0}},
      {"A7", "A7", {3, 0, 0, 1}},  {"A8", "A8", {4, 0, 0, 0}},  {"A9", "A9", {4, 0, 1, 0}},
      {"D4", "D4", {0, 1, 0, 2}},  {"D5", "D5", {1, 1, 0, 1}},  {"D6", "D6", {2, 0, 1, 1}},
      {"D7", "D7", {3, 0, 0, 1}},  {"D8", "D8", {3, 0, 0, 2}},  {"D9", "D9", {4, 0, 0, 1}},
      {"E6", "E6", {2, 1, 0, 0}},  {"E7", "E7", {3, 0, 1, 0}},  {"E8", "E8", {4, 0, 0, 0}},
      {"A7", "E7", {3, 0, 0, 0}},  {"A8", "E8", {4, 0, 0, 0}},  {"D8", "E8", {3, 0, 0, 1}},
      {"E10", "E10", {5, 0, 0, 0}},
  };
  return rows;
}

std::vector<TableRow> table_root_mod2() {
  const QuadSpaceF2& V = e10::mod2();
  std::vector<TableRow> out;
  for (const auto& ref : expected_table_root_mod2()) {
    std::vector<IntVec> vecs;
    TableRow row;
    if (ref.inner == "E10") {
      for (int i = 1; i <= e10::kRank; ++i) vecs.push_back(e10::basis_vector(i));
      row.inner = row.closure = "E10";
    } else {
      vecs = e10::configuration(make_config(ref.inner, ref.closure));
      if (vecs.empty()) throw InternalError("no stored embedding for " + ref.inner + "," + ref.closure);
      try {
        ConfigType ct = shimada_type(e10::span(vecs));
        row.inner = to_string(ct.inner);
        row.closure = to_string(ct.closure);
      } catch (const InvalidInput& e) {
        throw InternalError("embedding for " + ref.inner + " is not a root configuration");
      }
    }
    std::vector<Word> images;
    for (const auto& v : vecs) images.push_back(reduce_mod2(v));
    row.form = normal_form(V.restrict_to(f2_echelon(images)));
    out.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------- isotropic vectors

IntVec isotropic_in_complement(const Sublattice& s) {
  Sublattice k = orthogonal_complement(s);
  if (k.rank() == 0) throw InternalError("orthogonal complement is zero");
  const IntMatrix gk = k.gram();
  auto h = positive_vector(gk);
  if (!h) throw InternalError("orthogonal complement has no positive vector");
  const IntVec gh = *h * gk;
  const Int hh = dot(gh, *h);
  const std::size_t n = gk.rows();
  // Majorant h^2 * (-x^2) + 2 (x.h)^2; equals 2 (x.h)^2 on isotropic x.
  IntMatrix major(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) major(i, j) = -hh * gk(i, j) + 2 * gh[i] * gh[j];
  for (Int t = 1; t <= Int(1) << 20; t *= 2) {
    std::vector<IntVec> best;
    for (const auto& x : short_vectors(major, 2 * t * t)) {
      if (dot(x * gk, x) != 0 || vec_gcd(x) != 1) continue;
      IntVec v = k.to_ambient(x);
      auto nz = std::find_if(v.begin(), v.end(), [](const Int& c) { return c != 0; });
      if (*nz < 0) v = negate(v);
      best.push_back(v);
    }
    if (!best.empty()) return *std::min_element(best.begin(), best.end());
  }
  throw InternalError("no isotropic vector found in the orthogonal complement");
}

}  // namespace enriques
