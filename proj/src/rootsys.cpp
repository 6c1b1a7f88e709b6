#include "enriques/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "enriques/errors.hpp"

namespace enriques {

bool ADEType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
  }
  return false;
}

std::string ADEType::str() const {
  const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank);
}

ADEType ADEType::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidInput("bad ADE type: " + s);
  Family f;
  switch (s[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw InvalidInput("bad ADE type: " + s);
  }
  int r = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9' || r > 1000) throw InvalidInput("bad ADE type: " + s);
    r = r * 10 + (s[i] - '0');
  }
  ADEType t{f, r};
  if (!t.valid()) throw InvalidInput("invalid rank for ADE type: " + s);
  return t;
}

ADEType make_ade(Family f, int rank) {
  ADEType t{f, rank};
  if (!t.valid()) throw InvalidInput("invalid rank for ADE type: " + t.str());
  return t;
}

std::string to_string(const ADEMultiset& m) {
  if (m.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += "+";
    s += m[i].str();
  }
  return s;
}

int total_rank(const ADEMultiset& m) {
  int r = 0;
  for (const auto& t : m) r += t.rank;
  return r;
}

// ---------------------------------------------------------------- data

namespace {

std::vector<std::pair<int, int>> diagram_edges(ADEType t) {
  if (!t.valid()) throw InvalidInput("invalid rank for ADE type: " + t.str());
  const int n = t.rank;
  std::vector<std::pair<int, int>> e;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E: {
      const int chain = n - 1;
      for (int i = 0; i + 1 < chain; ++i) e.emplace_back(i, i + 1);
      const int branch_at = n == 8 ? 4 : 2;
      e.emplace_back(branch_at, n - 1);
      break;
    }
  }
  return e;
}

IntVec highest_root(ADEType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return IntVec(n, 1);
    case Family::D: {
      IntVec h(n, 2);
      h[0] = 1;
      h[n - 2] = 1;
      h[n - 1] = 1;
      return h;
    }
    case Family::E:
      if (n == 6) return int_vec({1, 2, 3, 2, 1, 2});
      if (n == 7) return int_vec({2, 3, 4, 3, 2, 1, 2});
      return int_vec({2, 3, 4, 5, 6, 4, 2, 3});
  }
  return {};
}

}  // namespace

IntMatrix cartan_matrix(ADEType t) {
  const auto edges = diagram_edges(t);
  IntMatrix c(t.rank, t.rank);
  for (int i = 0; i < t.rank; ++i) c(i, i) = 2;
  for (auto [a, b] : edges) c(a, b) = c(b, a) = -1;
  return c;
}

IntMatrix root_gram(ADEType t) { return -cartan_matrix(t); }

IntMatrix extended_root_gram(ADEType t) {
  IntMatrix g = root_gram(t);
  IntVec theta = highest_root(t);
  IntVec pair = theta * g;  // theta . r_i
  const std::size_t n = t.rank;
  IntMatrix ext(n + 1, n + 1);
  ext(0, 0) = -2;
  for (std::size_t i = 0; i < n; ++i) {
    ext(0, i + 1) = ext(i + 1, 0) = -pair[i];
    for (std::size_t j = 0; j < n; ++j) ext(i + 1, j + 1) = g(i, j);
  }
  return ext;
}

std::size_t root_count(ADEType t) {
  const std::size_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
  return 0;
}

int coxeter_number(ADEType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
  }
  return 0;
}

RootDatum root_datum(ADEType t) {
  if (!t.valid()) throw InvalidInput("invalid rank for ADE type: " + t.str());
  RootDatum d;
  d.type = t;
  d.cartan = cartan_matrix(t);
  d.highest_root = highest_root(t);
  d.extended_multiplicities = IntVec{1};
  d.extended_multiplicities.insert(d.extended_multiplicities.end(), d.highest_root.begin(),
                                   d.highest_root.end());
  switch (t.family) {
    case Family::A: d.discriminant = {Int(t.rank + 1)}; break;
    case Family::D:
      d.discriminant = t.rank % 2 ? std::vector<Int>{4} : std::vector<Int>{2, 2};
      break;
    case Family::E:
      if (t.rank == 6) d.discriminant = {3};
      if (t.rank == 7) d.discriminant = {2};
      break;
  }
  return d;
}

// ---------------------------------------------------------------- recognition

ADEMultiset recognize_ade(const IntMatrix& gram) {
  const std::string err = "not an ADE configuration";
  if (!gram.is_symmetric()) throw InvalidInput(err);
  const std::size_t n = gram.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gram(i, i) != -2) throw InvalidInput(err);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gram(i, j) == 1) adj[i].push_back(j);
      else if (gram(i, j) != 0) throw InvalidInput(err);
    }
  }
  std::vector<int> comp(n, -1);
  ADEMultiset out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> nodes{s};
    comp[s] = static_cast<int>(s);
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (auto j : adj[nodes[k]])
        if (comp[j] < 0) {
          comp[j] = static_cast<int>(s);
          nodes.push_back(j);
        }
    std::size_t edges = 0;
    std::vector<std::size_t> branch;
    for (auto v : nodes) {
      edges += adj[v].size();
      if (adj[v].size() > 3) throw InvalidInput(err);
      if (adj[v].size() == 3) branch.push_back(v);
    }
    edges /= 2;
    if (edges + 1 != nodes.size() || branch.size() > 1) throw InvalidInput(err);
    const int r = static_cast<int>(nodes.size());
    if (branch.empty()) {
      out.push_back({Family::A, r});
      continue;
    }
    std::vector<int> arms;
    for (auto start : adj[branch[0]]) {
      int len = 1;
      std::size_t prev = branch[0], cur = start;
      while (adj[cur].size() == 2) {
        std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) out.push_back({Family::D, r});
    else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) out.push_back({Family::E, r});
    else throw InvalidInput(err);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- root sublattices

bool is_positive_root(const IntVec& v) {
  Int phi = 0, w = 1;
  for (const auto& x : v) {
    phi += w * x;
    w *= 2;
  }
  if (phi != 0) return phi > 0;
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

std::vector<IntVec> simple_roots(const std::vector<IntVec>& positive) {
  std::set<IntVec> pos(positive.begin(), positive.end());
  std::set<IntVec> decomposable;
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      IntVec s = add(positive[i], positive[j]);
      if (pos.count(s)) decomposable.insert(s);
    }
  std::vector<IntVec> out;
  for (const auto& v : pos)
    if (!decomposable.count(v)) out.push_back(v);
  return out;
}

RootSublattice root_sublattice(const Lattice& l) {
  RootSublattice r;
  r.roots = enumerate_norm_vectors(l, Rational(-2));
  std::vector<IntVec> positive;
  for (const auto& v : r.roots)
    if (is_positive_root(v)) positive.push_back(v);
  r.fundamental = simple_roots(positive);
  r.lattice = Sublattice(l, IntMatrix::from_rows(r.fundamental, l.rank()));
  return r;
}

// ---------------------------------------------------------------- Shimada type

std::string ConfigType::str() const {
  return "(" + to_string(inner) + "," + to_string(closure) + ")";
}

namespace {

ADEMultiset parse_multiset(const std::string& s) {
  ADEMultiset m;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+'))
    if (!part.empty()) m.push_back(ADEType::parse(part));
  std::sort(m.begin(), m.end());
  return m;
}

ADEMultiset type_of_root_part(const Lattice& l, std::size_t expected_rank) {
  RootSublattice r = root_sublattice(l);
  if (r.fundamental.size() != expected_rank) throw InvalidInput("not an ADE configuration");
  IntMatrix f = IntMatrix::from_rows(r.fundamental, l.rank());
  return recognize_ade(Lattice(f * l.gram() * f.transpose(), l.scale()).scaled_gram());
}

}  // namespace

ConfigType make_config(const std::string& inner, const std::string& closure) {
  return ConfigType{parse_multiset(inner), parse_multiset(closure)};
}

ConfigType shimada_type(const Sublattice& s) {
  ConfigType c;
  c.inner = type_of_root_part(s.as_lattice(), s.rank());
  c.closure = type_of_root_part(saturate(s).as_lattice(), s.rank());
  return c;
}

}  // namespace enriques
