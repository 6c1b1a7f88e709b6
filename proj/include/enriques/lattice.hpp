#pragma once

#include <optional>
#include <vector>

#include "enriques/int_matrix.hpp"

namespace enriques {

// Free Z-module Z^n with bilinear form scale * gram.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram, Rational scale = 1);

  const IntMatrix& gram() const { return gram_; }
  const Rational& scale() const { return scale_; }
  std::size_t rank() const { return gram_.rows(); }

  Rational inner(const IntVec& a, const IntVec& b) const;
  Rational norm(const IntVec& a) const { return inner(a, a); }
  // Pairing with respect to the unscaled gram.
  Int raw_inner(const IntVec& a, const IntVec& b) const;

  // Gram matrix with the scale applied; throws if it is not integral.
  IntMatrix scaled_gram() const;
  bool is_integral() const;
  bool is_even() const;
  Int determinant() const { return gram_.determinant(); }

 private:
  IntMatrix gram_;
  Rational scale_ = 1;
};

// Sublattice spanned by the rows of basis, in ambient coordinates.
struct Sublattice {
  Lattice ambient;
  IntMatrix basis;

  Sublattice() = default;
  Sublattice(Lattice ambient, IntMatrix basis);
  Sublattice(Lattice ambient, const std::vector<IntVec>& rows);

  std::size_t rank() const { return basis.rows(); }
  // basis * gram * basis^T (unscaled).
  IntMatrix gram() const;
  // The sublattice as an abstract lattice with the ambient scale.
  Lattice as_lattice() const;
  // Ambient coordinates of a vector given in basis coordinates.
  IntVec to_ambient(const IntVec& coords) const;
  // Basis coordinates of an ambient vector known to lie in the sublattice.
  std::optional<IntVec> coordinates(const IntVec& v) const;
  bool contains(const IntVec& v) const { return coordinates(v).has_value(); }
};

struct DiscriminantGroup {
  std::vector<RatVec> generators;
  std::vector<Int> orders;
  std::vector<Rational> qvalues;  // in [0, 2); empty for odd lattices

  Int order() const;
};

struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inv;
};

SmithForm smith_normal_form(const IntMatrix& m);

Sublattice saturate(const Sublattice& s);
DiscriminantGroup discriminant_group(const Lattice& l);
Sublattice orthogonal_complement(const Sublattice& s);

// Integer kernel {x : x * m^T = 0}, as rows of a saturated basis.
IntMatrix integer_kernel(const IntMatrix& m);
// Z-basis (rows) of the row span of m.
IntMatrix row_span_basis(const IntMatrix& m);

// All v with v.v = n in a definite lattice, sorted lexicographically.
std::vector<IntVec> enumerate_norm_vectors(const Lattice& l, const Rational& n);

// All nonzero v with v*q*v^T <= bound for q positive definite, sorted lexicographically.
std::vector<IntVec> short_vectors(const IntMatrix& q, const Int& bound);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Signature signature(const IntMatrix& gram);

// Some vector with positive norm, if one exists.
std::optional<IntVec> positive_vector(const IntMatrix& gram);

Int vec_gcd(const IntVec& v);
IntVec primitive_part(const IntVec& v);

}  // namespace enriques
