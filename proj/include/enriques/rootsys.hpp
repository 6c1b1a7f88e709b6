#pragma once

#include <compare>
#include <string>
#include <vector>

#include "enriques/int_matrix.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

enum class Family { A, D, E };

struct ADEType {
  Family family = Family::A;
  int rank = 1;

  bool valid() const;
  std::string str() const;
  static ADEType parse(const std::string& s);

  auto operator<=>(const ADEType&) const = default;
};

ADEType make_ade(Family f, int rank);  // validates

// Sorted by (family, rank).
using ADEMultiset = std::vector<ADEType>;
std::string to_string(const ADEMultiset& m);
int total_rank(const ADEMultiset& m);

struct RootDatum {
  ADEType type;
  IntMatrix cartan;
  IntVec highest_root;
  IntVec extended_multiplicities;  // extending node first
  std::vector<Int> discriminant;   // cyclic orders
};

// Node order: chain first, branch node last for D (two forks) and E.
RootDatum root_datum(ADEType t);
IntMatrix cartan_matrix(ADEType t);
// Negated Cartan matrix: gram of the simple roots with norm -2.
IntMatrix root_gram(ADEType t);
// Gram of the extended diagram, extending node first.
IntMatrix extended_root_gram(ADEType t);
std::size_t root_count(ADEType t);
int coxeter_number(ADEType t);

ADEMultiset recognize_ade(const IntMatrix& gram);

struct RootSublattice {
  Sublattice lattice;               // spanned by the fundamental system
  std::vector<IntVec> fundamental;  // simple roots, ambient coordinates
  std::vector<IntVec> roots;        // all norm -2 vectors
};

// Positive roots: lexicographic sign of (phi(v), v) with phi = (1, 2, 4, ...).
bool is_positive_root(const IntVec& v);
std::vector<IntVec> simple_roots(const std::vector<IntVec>& positive_roots);

RootSublattice root_sublattice(const Lattice& l);

struct ConfigType {
  ADEMultiset inner;
  ADEMultiset closure;

  std::string str() const;
  auto operator<=>(const ConfigType&) const = default;
};

ConfigType make_config(const std::string& inner, const std::string& closure);
ConfigType shimada_type(const Sublattice& s);

}  // namespace enriques
