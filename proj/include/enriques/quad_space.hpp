#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enriques/int_matrix.hpp"

namespace enriques {

// Vectors over F2 are packed into a word; bit i is coordinate i.
using Word = std::uint32_t;
constexpr int kMaxF2Dim = 32;
constexpr int kMaxGroupDim = 16;

inline int parity(Word x) { return __builtin_parity(x); }
inline Word low_mask(int dim) { return dim >= 32 ? ~Word(0) : (Word(1) << dim) - 1; }

// Linear algebra over F2 on lists of words.
std::vector<Word> f2_echelon(std::vector<Word> vs);  // reduced, zero vectors dropped
int f2_rank(const std::vector<Word>& vs);
bool f2_in_span(const std::vector<Word>& echelon_basis, Word x);
Word f2_reduce(const std::vector<Word>& echelon_basis, Word x);
std::vector<Word> f2_span_elements(const std::vector<Word>& basis);
// {x in F2^dim : parity(x & r) = 0 for all r in rows}
std::vector<Word> f2_kernel(const std::vector<Word>& rows, int dim);
// Coordinates of x in the given independent list, or false.
bool f2_coordinates(const std::vector<Word>& basis, Word x, Word& coords);

struct NormalFormF2 {
  int u = 0;
  int v = 0;
  int e = 0;
  int k = 0;

  int dim() const { return 2 * u + 2 * v + e + k; }
  std::string str() const;  // e.g. "U2^3+[0]"
  bool operator==(const NormalFormF2&) const = default;
};

class QuadSpaceF2 {
 public:
  QuadSpaceF2() = default;
  QuadSpaceF2(int dim, std::vector<Word> bilinear_rows, Word qdiag);

  // b = gram mod 2, q(e_i) = gram_ii / 2 mod 2; gram must be even.
  static QuadSpaceF2 from_even_gram(const IntMatrix& gram);
  static QuadSpaceF2 U2();
  static QuadSpaceF2 V2();
  static QuadSpaceF2 one();
  static QuadSpaceF2 zero();
  static QuadSpaceF2 from_normal_form(const NormalFormF2& nf);
  static QuadSpaceF2 direct_sum(const QuadSpaceF2& a, const QuadSpaceF2& b);

  int dim() const { return dim_; }
  const std::vector<Word>& bilinear_rows() const { return rows_; }
  Word qdiag() const { return qdiag_; }
  Word mask() const { return low_mask(dim_); }

  int b(Word x, Word y) const;
  int q(Word x) const;
  // Word whose bits are b(e_i, x).
  Word polar(Word x) const;

  // Induced form on the span of an independent list, in its coordinates.
  QuadSpaceF2 restrict_to(const std::vector<Word>& basis) const;
  bool operator==(const QuadSpaceF2&) const = default;

 private:
  int dim_ = 0;
  std::vector<Word> rows_;
  Word qdiag_ = 0;
};

// Linear map acting on row vectors: x -> sum_i x_i * images[i].
struct IsometryF2 {
  int dim = 0;
  std::vector<Word> images;

  static IsometryF2 identity(int dim);
  // The map sending basis[i] to targets[i]; basis must span F2^dim.
  static IsometryF2 from_basis_images(int dim, const std::vector<Word>& basis,
                                      const std::vector<Word>& targets);
  Word apply(Word x) const;
  IsometryF2 then(const IsometryF2& other) const;  // x -> other(this(x))
  bool invertible() const;
  IsometryF2 inverse() const;
  bool is_identity() const;
  bool preserves(const QuadSpaceF2& V) const;
  bool operator==(const IsometryF2&) const = default;
};

struct Radicals {
  std::vector<Word> rad_b;
  std::vector<Word> rad_q;
};

// W given by a basis of ambient vectors.
Radicals radicals(const QuadSpaceF2& V, const std::vector<Word>& W);
std::vector<Word> orthogonal_subspace(const QuadSpaceF2& V, const std::vector<Word>& W);

struct NormalFormWitness {
  NormalFormF2 form;
  // Images of the standard basis of from_normal_form(form): hyperbolic pairs,
  // the anisotropic plane, the [1] vector, then the [0] vectors.
  std::vector<Word> basis;
};

NormalFormF2 normal_form(const QuadSpaceF2& V);
NormalFormWitness normal_form_witness(const QuadSpaceF2& V);

IsometryF2 transvection(const QuadSpaceF2& V, Word v);

}  // namespace enriques
