#pragma once

#include <string>
#include <vector>

#include "enriques/e10.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

struct GlueClass {
  RatVec minus;  // class in the dual of the anti-invariant lattice
  Word plus = 0; // class in E10 (x) F2
};

struct GluedK3Input {
  IntMatrix gram_minus;
  std::vector<GlueClass> glue;
};

struct SplittingRoots {
  Sublattice lattice;        // R, inside the anti-invariant lattice scaled by 1/2
  std::vector<IntVec> roots; // all v with v^2 = -4 and v/2 glued, ambient coordinates
  std::vector<IntVec> fundamental;
};

SplittingRoots splitting_root_lattice_from_k3(const GluedK3Input& input);

// Image of a splitting root v under the glue map, in E10 (x) F2.
Word glue_image(const GluedK3Input& input, const IntVec& v);

struct InvariantComponent {
  ComponentType type;
  std::vector<Word> sigma;  // sorted; may be empty when only the type is known
};

struct RootInvariant {
  std::vector<InvariantComponent> components;

  int total_rank() const;
};

RootInvariant nikulin_root_invariant(const GluedK3Input& input);

std::vector<std::string> validate_invariant(const RootInvariant& inv);

}  // namespace enriques
