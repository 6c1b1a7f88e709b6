#pragma once

#include <string>
#include <vector>

#include "enriques/lattice.hpp"
#include "enriques/quad_space.hpp"
#include "enriques/rootsys.hpp"

namespace enriques {

// The E10 lattice in the basis e1..e10 of its diagram: a chain e1 - ... - e9
// with e10 attached to e7, diagonal -2 and adjacent products 1.
namespace e10 {

constexpr int kRank = 10;

const IntMatrix& gram();
const Lattice& lattice();
const QuadSpaceF2& mod2();

IntVec basis_vector(int i);  // 1-based: e1..e10
Sublattice span(const std::vector<IntVec>& vectors);

// Reference vectors.
IntVec e11();  // completes {e4..e9} to an A7 with closure E7
IntVec f1();   // isotropic, radical of the affine E8 on e2..e10
IntVec f2();
IntVec d1();   // minus the highest root of the E8 on e3..e10
std::vector<IntVec> a7_e7_configuration();  // {e4..e9, e11}
std::vector<IntVec> a8_e8_configuration();  // {d1, e3..e9}
std::vector<IntVec> d8_e8_configuration();  // d1..d8

// A fixed root configuration of the given Shimada type; empty if none is stored.
std::vector<IntVec> configuration(const ConfigType& c);

// All norm -2 vectors in the span of the given vectors.
std::vector<IntVec> roots_in_span(const std::vector<IntVec>& generators);

// Reflection x -> x + (x.r) r in a root r.
IntVec reflect(const IntVec& x, const IntVec& r);

}  // namespace e10

struct ComponentType {
  ADEType ade;
  int kernel = 0;

  std::string str() const;
  auto operator<=>(const ComponentType&) const = default;
};

Word reduce_mod2(const IntVec& x);
IntVec lift_mod2(Word w);  // 0/1 coordinates

struct DeltaComponent {
  std::vector<Word> vertices;  // sorted
  ComponentType type;
  int dimension = 0;  // dim of the span of the vertices
};

// Components of the graph on the given q = 1 vectors (edges where b = 1),
// typed from the graph alone. Throws "invalid component" when a component is
// not the graph of a positive ADE root system.
std::vector<DeltaComponent> classify_delta_bar(const std::vector<Word>& vertices);

// Same, starting from E10 roots; the graph type is checked against the lift.
std::vector<DeltaComponent> delta_bar_components(const std::vector<IntVec>& roots);

struct TableRow {
  std::string inner;
  std::string closure;
  NormalFormF2 form;

  bool operator==(const TableRow&) const = default;
};

// Reference values of the mod 2 table.
const std::vector<TableRow>& expected_table_root_mod2();
// Recomputed from explicit embeddings; throws InternalError on an embedding failure.
std::vector<TableRow> table_root_mod2();

// Primitive isotropic vector in the orthogonal complement of s.
IntVec isotropic_in_complement(const Sublattice& s);

}  // namespace enriques
