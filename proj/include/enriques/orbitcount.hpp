#pragma once

#include <string>
#include <utility>
#include <vector>

#include "enriques/invariant.hpp"
#include "enriques/perm_group.hpp"

namespace enriques {

struct VinbergGroupSpec {
  std::vector<IsometryF2> extra_generators;  // q-preserving maps of E10 (x) F2
};

// Weights of the orbit-count formula; throws for types outside the table.
int weight(const ComponentType& t);
const std::vector<std::pair<ComponentType, int>>& weight_table();

struct OrbitCountResult {
  std::vector<std::vector<std::size_t>> component_orbits;
  std::vector<int> per_orbit_weight;
  int total = 0;
};

std::vector<IsometryF2> weyl_generators(const std::vector<Word>& delta_bar);

// Fills in sigma for every component from stored embeddings in E10: connected
// sub-diagrams of the E10 diagram, and the fixtures for kernel one. Throws when
// no choice has pairwise separated images mod 2.
RootInvariant canonical_model(const RootInvariant& inv);

// Without extra generators every component is its own orbit and sigma is not needed.
std::vector<std::vector<std::size_t>> component_orbit_partition(const RootInvariant& inv,
                                                                const VinbergGroupSpec& spec);
OrbitCountResult count_curve_orbits(const RootInvariant& inv, const VinbergGroupSpec& spec);

std::vector<ConfigType> maximal_config_types(const ComponentType& t);
int max_config_orbit_bound(const ComponentType& t, const ConfigType& c);

enum class Verdict { yes, no, undetermined };
std::string to_string(Verdict v);

// Whether two root configurations of E10 lie in one orbit of the congruence
// subgroup O(E10)(2). Undetermined when the first spans an A9.
Verdict same_congruence_orbit(const std::vector<IntVec>& b1, const std::vector<IntVec>& b2);

// Integer solutions of 2x^2 + 6xy = c, ordered by |x| descending, then x.
std::vector<std::pair<Int, Int>> solve_binary_quadratic(const Int& c);

}  // namespace enriques
