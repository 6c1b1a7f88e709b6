#pragma once

#include <array>
#include <vector>

#include "enriques/int_matrix.hpp"
#include "enriques/quad_space.hpp"

namespace enriques {

// Group of invertible linear maps of F2^dim, acting on nonzero vectors.
// Schreier-Sims with a base that is a vector-space basis, so the pointwise
// stabilizer of the first j base points is the stabilizer of their span.
class PermGroup {
 public:
  PermGroup(int dim, const std::vector<IsometryF2>& generators,
            const std::vector<Word>& base_prefix = {});

  int dim() const { return dim_; }
  // Generators that were not redundant when added.
  const std::vector<IsometryF2>& generators() const { return generators_; }
  const std::vector<Word>& base() const { return base_; }
  std::vector<std::size_t> orbit_sizes() const;

  Int order() const;
  // Order of the pointwise stabilizer of base()[0..levels-1].
  Int stabilizer_order(std::size_t levels) const;
  bool contains(const IsometryF2& g) const;

 private:
  using Elem = std::array<Word, kMaxGroupDim>;

  struct Level {
    Word point = 0;
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<Word> orbit;
    std::vector<int> pos;  // point -> orbit index, -1 if absent
    std::vector<Elem> transversal;
    std::vector<Elem> transversal_inv;
    std::vector<std::vector<char>> tested;
  };

  Elem identity() const;
  Word apply(const Elem& g, Word x) const;
  Elem mul(const Elem& a, const Elem& b) const;  // x -> b(a(x))
  Elem inv(const Elem& g) const;
  bool is_identity(const Elem& g) const;
  Elem to_elem(const IsometryF2& g) const;

  std::size_t first_moved(const Elem& g) const;
  std::pair<std::size_t, Elem> strip(Elem g, std::size_t start) const;
  void add_strong(const Elem& g, std::size_t upto);
  void update_orbit(std::size_t level);
  void complete();

  int dim_;
  std::vector<Word> base_;
  std::vector<Level> levels_;
  std::vector<Elem> strong_;
  std::vector<IsometryF2> generators_;
};

Int group_order(const PermGroup& G);

// Generators of O(V): transvections on a half-regular complement of rad(q),
// one extra generator for the plus-type space of dimension 4, elementary maps
// of GL(rad q), and the maps x -> x + z from Hom(complement, rad q).
std::vector<IsometryF2> orthogonal_group_generators(const QuadSpaceF2& V);
PermGroup orthogonal_group(const QuadSpaceF2& V);

Int pointwise_stabilizer_order(const QuadSpaceF2& V, const std::vector<Word>& W);
Int stabilizer_order_formula(const QuadSpaceF2& V, const std::vector<Word>& W);

// Orbits on nonzero vectors, each sorted, ordered by least element.
std::vector<std::vector<Word>> vector_orbits(const PermGroup& G, const QuadSpaceF2& V);
std::vector<std::vector<Word>> vector_orbits(const std::vector<IsometryF2>& generators,
                                             const QuadSpaceF2& V);

}  // namespace enriques
