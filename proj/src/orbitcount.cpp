#include "enriques/orbitcount.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "enriques/errors.hpp"

namespace enriques {

namespace {

ComponentType ct(Family f, int rank, int kernel) { return ComponentType{ADEType{f, rank}, kernel}; }

}  // namespace

const std::vector<std::pair<ComponentType, int>>& weight_table() {
  static const std::vector<std::pair<ComponentType, int>> table = [] {
    std::vector<std::pair<ComponentType, int>> t;
    for (int n = 1; n <= 9; ++n) t.emplace_back(ct(Family::A, n, 0), 1);
    for (int n = 4; n <= 8; ++n) t.emplace_back(ct(Family::D, n, 0), 1);
    t.emplace_back(ct(Family::D, 9, 0), 2);
    t.emplace_back(ct(Family::E, 6, 0), 1);
    t.emplace_back(ct(Family::E, 7, 0), 2);
    t.emplace_back(ct(Family::E, 8, 0), 4);
    t.emplace_back(ct(Family::A, 7, 1), 1);
    t.emplace_back(ct(Family::D, 8, 1), 2);
    return t;
  }();
  return table;
}

int weight(const ComponentType& t) {
  for (const auto& [k, w] : weight_table())
    if (k == t) return w;
  throw InvalidInput("no weight for component type " + t.str());
}

std::vector<IsometryF2> weyl_generators(const std::vector<Word>& delta_bar) {
  std::vector<IsometryF2> out;
  for (Word v : delta_bar) out.push_back(transvection(e10::mod2(), v));
  return out;
}

// ---------------------------------------------------------------- canonical model

namespace {

struct Candidate {
  ComponentType type;
  std::vector<IntVec> vectors;
  std::vector<Word> sigma;
};

std::vector<Word> sigma_of(const std::vector<IntVec>& vectors) {
  std::set<Word> s;
  for (const auto& r : e10::roots_in_span(vectors)) s.insert(reduce_mod2(r));
  return std::vector<Word>(s.begin(), s.end());
}

const std::vector<Candidate>& embedding_candidates() {
  static const std::vector<Candidate> cands = [] {
    std::vector<Candidate> out;
    const IntMatrix& g = e10::gram();
    for (unsigned mask = 1; mask < (1u << e10::kRank); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < e10::kRank; ++i)
        if (mask >> i & 1) idx.push_back(i);
      IntMatrix sub(idx.size(), idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = g(idx[a], idx[b]);
      ADEMultiset t;
      try {
        t = recognize_ade(sub);
      } catch (const InvalidInput&) {
        continue;
      }
      if (t.size() != 1) continue;
      Candidate c{ComponentType{t[0], 0}, {}, {}};
      for (int i : idx) c.vectors.push_back(e10::basis_vector(i + 1));
      out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Candidate& a, const Candidate& b) { return a.vectors.size() < b.vectors.size(); });
    out.push_back(Candidate{ct(Family::A, 7, 1), e10::a7_e7_configuration(), {}});
    out.push_back(Candidate{ct(Family::D, 8, 1), e10::d8_e8_configuration(), {}});
    for (auto& c : out) c.sigma = sigma_of(c.vectors);
    return out;
  }();
  return cands;
}

bool separated(const std::vector<Word>& a, const std::vector<Word>& b) {
  const QuadSpaceF2& V = e10::mod2();
  for (Word x : a)
    for (Word y : b)
      if (x == y || V.b(x, y)) return false;
  return true;
}

}  // namespace

RootInvariant canonical_model(const RootInvariant& inv) {
  const auto& cands = embedding_candidates();
  const std::size_t n = inv.components.size();
  std::vector<const Candidate*> chosen(n, nullptr);
  RootInvariant out;

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == n) {
      RootInvariant model;
      for (std::size_t j = 0; j < n; ++j)
        model.components.push_back(InvariantComponent{inv.components[j].type, chosen[j]->sigma});
      if (!validate_invariant(model).empty()) return false;
      out = std::move(model);
      return true;
    }
    for (const auto& c : cands) {
      if (c.type != inv.components[i].type) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = separated(chosen[j]->sigma, c.sigma);
      if (!ok) continue;
      chosen[i] = &c;
      if (search(i + 1)) return true;
    }
    return false;
  };
  if (!search(0)) throw InvalidInput("no canonical embedding in E10 for this invariant; supply sigma");
  return out;
}

// ---------------------------------------------------------------- orbit counting

std::vector<std::vector<std::size_t>> component_orbit_partition(const RootInvariant& input,
                                                                const VinbergGroupSpec& spec) {
  std::size_t with_sigma = 0;
  for (const auto& c : input.components)
    if (!c.sigma.empty()) ++with_sigma;
  if (with_sigma != 0 && with_sigma != input.components.size())
    throw InvalidInput("sigma must be given for all components or for none");
  const std::size_t n = input.components.size();
  if (spec.extra_generators.empty()) {
    std::vector<std::vector<std::size_t>> singletons;
    for (std::size_t i = 0; i < n; ++i) singletons.push_back({i});
    return singletons;
  }
  const RootInvariant inv = with_sigma == 0 && n > 0 ? canonical_model(input) : input;

  const QuadSpaceF2& V = e10::mod2();
  std::map<Word, std::size_t> owner;
  for (std::size_t i = 0; i < inv.components.size(); ++i)
    for (Word w : inv.components[i].sigma) owner[w] = i;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };

  for (const auto& g : spec.extra_generators) {
    if (g.dim != V.dim() || static_cast<int>(g.images.size()) != V.dim() || !g.preserves(V))
      throw InvalidInput("not a Vinberg generator");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& sigma = inv.components[i].sigma;
      auto it = owner.find(g.apply(sigma.front()));
      if (it == owner.end()) throw InvalidInput("not a Vinberg generator");
      const std::size_t j = it->second;
      for (Word w : sigma) {
        auto jt = owner.find(g.apply(w));
        if (jt == owner.end() || jt->second != j) throw InvalidInput("not a Vinberg generator");
      }
      if (inv.components[i].type != inv.components[j].type)
        throw InternalError("isometry maps a component to one of different type");
      parent[find(i)] = find(j);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

OrbitCountResult count_curve_orbits(const RootInvariant& inv, const VinbergGroupSpec& spec) {
  auto violations = validate_invariant(inv);
  if (!violations.empty()) {
    std::string msg = "invalid root invariant:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw InvalidInput(msg);
  }
  OrbitCountResult r;
  r.component_orbits = component_orbit_partition(inv, spec);
  for (const auto& orbit : r.component_orbits) {
    const int w = weight(inv.components[orbit.front()].type);
    r.per_orbit_weight.push_back(w);
    r.total += w;
  }
  return r;
}

// ---------------------------------------------------------------- maximal configurations

std::vector<ConfigType> maximal_config_types(const ComponentType& t) {
  weight(t);  // rejects types outside the table
  const std::string s = t.ade.str();
  auto one = [](const std::string& a, const std::string& b) { return make_config(a, b); };
  std::vector<ConfigType> out;
  if (t.kernel == 1) {
    if (t.ade == ADEType{Family::A, 7}) out = {one("A7", "E7")};
    else out = {one("A7", "E7"), one("D8", "E8")};
  } else if (t.ade == ADEType{Family::A, 8}) {
    out = {one("A8", "A8"), one("A8", "E8")};
  } else if (t.ade == ADEType{Family::E, 7}) {
    out = {one("A7", "E7"), one("E7", "E7")};
  } else if (t.ade == ADEType{Family::E, 8}) {
    out = {one("A8", "E8"), one("D8", "E8"), one("E8", "E8"), one("A8", "A8"), one("A7", "E7")};
  } else if (t.ade == ADEType{Family::A, 9}) {
    out = {one("A9", "A9"), one("A8", "E8")};
  } else if (t.ade == ADEType{Family::D, 9}) {
    out = {one("D9", "D9"), one("A8", "E8")};
  } else {
    out = {one(s, s)};
  }
  std::sort(out.begin(), out.end());
  return out;
}

int max_config_orbit_bound(const ComponentType& t, const ConfigType& c) {
  auto admissible = maximal_config_types(t);
  if (std::find(admissible.begin(), admissible.end(), c) == admissible.end())
    throw InvalidInput("configuration type " + c.str() + " is not maximal for " + t.str());
  const ConfigType a7e7 = make_config("A7", "E7"), d8e8 = make_config("D8", "E8");
  if (t == ct(Family::A, 7, 1) && c == a7e7) return 5;
  if (t == ct(Family::E, 7, 0) && c == a7e7) return 6;
  if (t == ct(Family::D, 8, 1) && c == d8e8) return 4;
  if (t == ct(Family::D, 8, 1) && c == a7e7) return 2;
  if (t == ct(Family::E, 8, 0) && c == d8e8) return 3;
  return 1;
}

// ---------------------------------------------------------------- congruence orbits

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undetermined: return "undetermined";
  }
  return "";
}

namespace {

ConfigType check_configuration(const std::vector<IntVec>& b) {
  const Lattice& L = e10::lattice();
  if (b.empty()) throw InvalidInput("empty configuration");
  IntMatrix m = IntMatrix::from_rows(b, e10::kRank);
  IntMatrix g = m * L.gram() * m.transpose();
  recognize_ade(g);  // throws "not an ADE configuration"
  if (m.rank() != b.size()) throw InvalidInput("configuration vectors are linearly dependent");
  return shimada_type(e10::span(b));
}

std::vector<Word> closure_mod2(const std::vector<IntVec>& b) {
  Sublattice c = saturate(e10::span(b));
  std::vector<Word> w;
  for (std::size_t i = 0; i < c.rank(); ++i) w.push_back(reduce_mod2(c.basis.row(i)));
  return f2_echelon(w);
}

std::set<Word> images(const std::vector<IntVec>& b) {
  std::set<Word> s;
  for (const auto& v : b) s.insert(reduce_mod2(v));
  return s;
}

}  // namespace

Verdict same_congruence_orbit(const std::vector<IntVec>& b1, const std::vector<IntVec>& b2) {
  const ConfigType t1 = check_configuration(b1);
  const ConfigType t2 = check_configuration(b2);
  if (t1.inner == ADEMultiset{ADEType{Family::A, 9}}) return Verdict::undetermined;
  if (t1 != t2 || b1.size() != b2.size()) return Verdict::no;
  if (images(b1) != images(b2)) return Verdict::no;
  if (closure_mod2(b1) != closure_mod2(b2)) return Verdict::no;
  return Verdict::yes;
}

// ---------------------------------------------------------------- 2x^2 + 6xy = c

std::vector<std::pair<Int, Int>> solve_binary_quadratic(const Int& c) {
  if (c == 0) throw InvalidInput("infinite solution set");
  const Int ac = c < 0 ? Int(-c) : c;
  std::vector<Int> divisors;
  for (Int d = 1; d * d <= ac; ++d)
    if (ac % d == 0) {
      divisors.push_back(d);
      if (d * d != ac) divisors.push_back(ac / d);
    }
  std::vector<std::pair<Int, Int>> out;
  for (const Int& d : divisors)
    for (const Int& x : {Int(-d), d}) {
      const Int num = c / x - 2 * x;
      if (num % 6 == 0) out.emplace_back(x, num / 6);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const Int aa = abs(a.first), bb = abs(b.first);
    if (aa != bb) return aa > bb;
    return a.first < b.first;
  });
  return out;
}

}  // namespace enriques
