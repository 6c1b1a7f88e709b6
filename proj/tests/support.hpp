#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "enriques/e10.hpp"
#include "enriques/int_matrix.hpp"
#include "enriques/quad_space.hpp"
#include "enriques/rootsys.hpp"

namespace enriques::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, long long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-bound, bound);
  return m;
}

// Every subspace of F2^dim, each as a reduced echelon basis.
inline std::vector<std::vector<Word>> all_subspaces(int dim) {
  std::vector<std::vector<Word>> out{{}};
  std::vector<std::vector<Word>> frontier{{}};
  for (int d = 1; d <= dim; ++d) {
    std::vector<std::vector<Word>> next;
    for (const auto& s : frontier)
      for (Word x = 1; x < (Word(1) << dim); ++x) {
        if (f2_in_span(s, x)) continue;
        auto t = s;
        t.push_back(x);
        t = f2_echelon(t);
        if (std::find(next.begin(), next.end(), t) == next.end()) next.push_back(t);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// All q-preserving invertible linear maps, by brute force over basis images.
inline std::size_t brute_force_orthogonal_order(const QuadSpaceF2& V) {
  const int n = V.dim();
  const Word top = Word(1) << n;
  std::size_t count = 0;
  std::vector<Word> images(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (f2_rank(images) != n) return;
      IsometryF2 g{n, images};
      if (g.preserves(V)) ++count;
      return;
    }
    for (Word x = 1; x < top; ++x) {
      if (V.q(x) != V.q(Word(1) << i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (V.b(x, images[j]) != V.b(Word(1) << i, Word(1) << j)) ok = false;
      if (!ok) continue;
      images[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

// All normal forms of the given dimension.
inline std::vector<NormalFormF2> normal_forms(int dim) {
  std::vector<NormalFormF2> out;
  for (int v = 0; v <= 1; ++v)
    for (int e = 0; e <= 1; ++e) {
      if (v && e) continue;
      for (int u = 0; 2 * u + 2 * v + e <= dim; ++u) out.push_back({u, v, e, dim - 2 * u - 2 * v - e});
    }
  return out;
}

}  // namespace enriques::testing

#include "enriques/invariant.hpp"
#include "enriques/lattice.hpp"

namespace enriques::testing {

// A root configuration in E10: a random set of diagram nodes spanning a
// definite lattice, or one of the stored imprimitive fixtures, moved by a
// few random simple reflections.
inline std::vector<IntVec> random_configuration() {
  std::vector<IntVec> config;
  const int kind = static_cast<int>(uniform(0, 9));
  if (kind == 0) {
    config = e10::a7_e7_configuration();
  } else if (kind == 1) {
    config = e10::d8_e8_configuration();
  } else if (kind == 2) {
    config = e10::a8_e8_configuration();
  } else {
    while (true) {
      config.clear();
      const int size = static_cast<int>(uniform(1, 9));
      std::vector<int> nodes(10);
      for (int i = 0; i < 10; ++i) nodes[i] = i + 1;
      std::shuffle(nodes.begin(), nodes.end(), rng());
      for (int i = 0; i < size; ++i) config.push_back(e10::basis_vector(nodes[i]));
      const IntMatrix m = IntMatrix::from_rows(config, e10::kRank);
      if (signature(m * e10::gram() * m.transpose()).negative == size) break;
    }
  }
  const int moves = static_cast<int>(uniform(0, 6));
  for (int k = 0; k < moves; ++k) {
    const IntVec r = e10::basis_vector(static_cast<int>(uniform(1, 10)));
    for (auto& v : config) v = e10::reflect(v, r);
  }
  return config;
}

struct GeneratedInput {
  std::vector<IntVec> configuration;  // in E10
  std::vector<IntVec> glued;          // the configuration vectors whose halves are glued
  GluedK3Input input;
};

// Anti-invariant lattice R'(2) for the closure R' of a configuration, glued
// along the halves of a random subset of the configuration.
inline GeneratedInput random_glued_input() {
  GeneratedInput g;
  g.configuration = random_configuration();
  const Sublattice closure = saturate(e10::span(g.configuration));
  g.input.gram_minus = closure.gram().scaled(2);
  for (const auto& b : g.configuration) {
    if (uniform(0, 3) == 0) continue;
    const IntVec c = *closure.coordinates(b);
    RatVec half;
    for (const auto& x : c) half.push_back(Rational(x, 2));
    g.input.glue.push_back(GlueClass{half, reduce_mod2(b)});
    g.glued.push_back(b);
  }
  return g;
}

}  // namespace enriques::testing
