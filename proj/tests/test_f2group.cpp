#include <gtest/gtest.h>

#include <set>

#include "enriques/e10.hpp"
#include "enriques/errors.hpp"
#include "enriques/perm_group.hpp"
#include "enriques/quad_space.hpp"
#include "support.hpp"

using namespace enriques;
using enriques::testing::all_subspaces;
using enriques::testing::brute_force_orthogonal_order;
using enriques::testing::normal_forms;
using enriques::testing::uniform;

namespace {

QuadSpaceF2 nf(int u, int v, int e, int k) { return QuadSpaceF2::from_normal_form({u, v, e, k}); }

// The linear map A -> B carrying one normal-form basis to the other.
IsometryF2 isometry_between(const QuadSpaceF2& A, const QuadSpaceF2& B) {
  const auto wa = normal_form_witness(A), wb = normal_form_witness(B);
  EXPECT_EQ(wa.form, wb.form);
  return IsometryF2::from_basis_images(A.dim(), wa.basis, wb.basis);
}

bool is_isometry(const IsometryF2& g, const QuadSpaceF2& A, const QuadSpaceF2& B) {
  if (!g.invertible()) return false;
  for (Word x = 0; x < (Word(1) << A.dim()); ++x)
    if (B.q(g.apply(x)) != A.q(x)) return false;
  return true;
}

IsometryF2 random_invertible(int dim) {
  while (true) {
    IsometryF2 g{dim, {}};
    for (int i = 0; i < dim; ++i) g.images.push_back(static_cast<Word>(uniform(0, (1 << dim) - 1)));
    if (g.invertible()) return g;
  }
}

// The space with the same forms transported along g: basis vector i goes to images[i].
QuadSpaceF2 transport(const QuadSpaceF2& V, const IsometryF2& g) {
  const IsometryF2 h = g.inverse();
  std::vector<Word> rows;
  Word q = 0;
  for (int i = 0; i < V.dim(); ++i) {
    const Word x = h.apply(Word(1) << i);
    if (V.q(x)) q |= Word(1) << i;
    Word r = 0;
    for (int j = 0; j < V.dim(); ++j)
      if (V.b(x, h.apply(Word(1) << j))) r |= Word(1) << j;
    rows.push_back(r);
  }
  return QuadSpaceF2(V.dim(), rows, q);
}

Int orthogonal_plus_order(int m) {
  // 2 q^{m(m-1)} (q^m - 1) prod_{i<m} (q^{2i} - 1) at q = 2.
  Int r = 2;
  r <<= m * (m - 1);
  r *= (Int(1) << m) - 1;
  for (int i = 1; i < m; ++i) r *= (Int(1) << (2 * i)) - 1;
  return r;
}

}  // namespace

TEST(QuadSpace, PolarIdentityExhaustive) {
  for (int dim = 1; dim <= 12; dim += 1) {
    const QuadSpaceF2 V = nf(dim / 2, 0, dim % 2, 0);
    const QuadSpaceF2 W = transport(V, random_invertible(dim));
    const Word top = Word(1) << dim;
    for (Word x = 0; x < top; x += (dim > 8 ? 7 : 1))
      for (Word y = 0; y < top; y += (dim > 8 ? 5 : 1)) {
        ASSERT_EQ(W.q(x ^ y) ^ W.q(x) ^ W.q(y), W.b(x, y));
        ASSERT_EQ(W.b(x, x), 0);
      }
  }
}

TEST(QuadSpace, RejectsNonAlternatingForm) {
  EXPECT_THROW(QuadSpaceF2(2, {1, 0}, 0), InvalidInput);
  EXPECT_THROW(QuadSpaceF2(2, {2, 0}, 0), InvalidInput);
}

TEST(NormalForm, E10ModTwoIsU2ToTheFifth) {
  EXPECT_EQ(normal_form(e10::mod2()), (NormalFormF2{5, 0, 0, 0}));
  EXPECT_EQ(normal_form(e10::mod2()).str(), "U2^5");
}

TEST(NormalForm, A5ModTwo) {
  const auto V = QuadSpaceF2::from_even_gram(root_gram(make_ade(Family::A, 5)));
  EXPECT_EQ(normal_form(V), (NormalFormF2{2, 0, 1, 0}));
  EXPECT_EQ(normal_form(V).str(), "U2^2+[1]");
}

TEST(NormalForm, RelationsHoldAsIsometries) {
  const auto U2 = QuadSpaceF2::U2(), V2 = QuadSpaceF2::V2(), one = QuadSpaceF2::one(), zero = QuadSpaceF2::zero();
  const std::vector<std::pair<QuadSpaceF2, QuadSpaceF2>> relations = {
      {QuadSpaceF2::direct_sum(U2, U2), QuadSpaceF2::direct_sum(V2, V2)},
      {QuadSpaceF2::direct_sum(U2, one), QuadSpaceF2::direct_sum(V2, one)},
      {QuadSpaceF2::direct_sum(one, one), QuadSpaceF2::direct_sum(one, zero)},
  };
  for (const auto& [A, B] : relations) {
    EXPECT_EQ(normal_form(A), normal_form(B));
    EXPECT_TRUE(is_isometry(isometry_between(A, B), A, B));
  }
}

TEST(NormalForm, WitnessRealizesTheForm) {
  for (int dim = 1; dim <= 8; ++dim)
    for (const auto& f : normal_forms(dim)) {
      const QuadSpaceF2 V = transport(QuadSpaceF2::from_normal_form(f), random_invertible(dim));
      const auto w = normal_form_witness(V);
      EXPECT_EQ(w.form, f);
      EXPECT_EQ(V.restrict_to(w.basis), QuadSpaceF2::from_normal_form(f));
    }
}

TEST(NormalForm, InvariantUnderRandomIsometries) {
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = uniform(1, 10);
    // Random form: random alternating b and random q on the basis.
    std::vector<Word> rows(dim, 0);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (uniform(0, 1)) {
          rows[i] |= Word(1) << j;
          rows[j] |= Word(1) << i;
        }
    const QuadSpaceF2 V(dim, rows, static_cast<Word>(uniform(0, (1 << dim) - 1)));
    const NormalFormF2 f = normal_form(V);
    EXPECT_EQ(f.dim(), dim);
    EXPECT_EQ(f.v * f.e, 0);
    EXPECT_EQ(normal_form(transport(V, random_invertible(dim))), f);
  }
}

TEST(NormalForm, DistinctFormsAreNotIsometric) {
  // Number of q-zeros together with dim rad b and q on it separates normal forms.
  for (int dim = 1; dim <= 6; ++dim) {
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& f : normal_forms(dim)) {
      const QuadSpaceF2 V = QuadSpaceF2::from_normal_form(f);
      int zeros = 0;
      for (Word x = 0; x < (Word(1) << dim); ++x) zeros += V.q(x) == 0;
      std::vector<Word> all;
      for (int i = 0; i < dim; ++i) all.push_back(Word(1) << i);
      const auto r = radicals(V, all);
      EXPECT_TRUE(seen.insert({zeros, static_cast<int>(r.rad_b.size()), static_cast<int>(r.rad_q.size())}).second)
          << f.str();
    }
  }
}

TEST(Radicals, Examples) {
  const QuadSpaceF2 V = nf(2, 0, 0, 0);
  const auto line = radicals(V, {1});
  EXPECT_EQ(line.rad_b.size(), 0u + 1);
  EXPECT_TRUE(radicals(V, {Word(0b11)}).rad_q.empty());

  std::vector<Word> d8, e7;
  for (const auto& r : e10::d8_e8_configuration()) d8.push_back(reduce_mod2(r));
  // D8 (x) F2 has a two dimensional radical; its image in E10 (x) F2 has a one dimensional one.
  const auto d8_abstract = QuadSpaceF2::from_even_gram(root_gram(make_ade(Family::D, 8)));
  EXPECT_EQ(radicals(d8_abstract, {1, 2, 4, 8, 16, 32, 64, 128}).rad_b.size(), 2u);
  const auto d8_image = radicals(e10::mod2(), f2_echelon(d8));
  EXPECT_EQ(d8_image.rad_b.size(), 1u);
  EXPECT_EQ(d8_image.rad_q, d8_image.rad_b);

  const Sublattice closure = saturate(e10::span(e10::a7_e7_configuration()));
  for (const auto& r : closure.basis.row_list()) e7.push_back(reduce_mod2(r));
  const auto re7 = radicals(e10::mod2(), f2_echelon(e7));
  EXPECT_EQ(re7.rad_b.size(), 1u);
  EXPECT_TRUE(re7.rad_q.empty());

  EXPECT_THROW(radicals(V, {1, 1}), InvalidInput);
}

TEST(Transvection, Basics) {
  const QuadSpaceF2& V = e10::mod2();
  for (int trial = 0; trial < 100; ++trial) {
    Word v;
    do v = static_cast<Word>(uniform(1, 1023));
    while (V.q(v) != 1);
    const IsometryF2 s = transvection(V, v);
    EXPECT_TRUE(s.then(s).is_identity());
    EXPECT_TRUE(s.preserves(V));
    EXPECT_EQ(s.apply(v), v);
    for (Word x = 0; x < 1024; x += 13) {
      EXPECT_EQ(V.q(s.apply(x)), V.q(x));
      if (V.b(x, v) == 0) {
        EXPECT_EQ(s.apply(x), x);
      }
    }
  }
}

TEST(Transvection, RadicalVectorGivesIdentity) {
  const QuadSpaceF2 V = nf(1, 0, 1, 0);  // U2 + [1]
  EXPECT_TRUE(transvection(V, 0b100).is_identity());
}

TEST(Transvection, RejectsIsotropicVector) {
  try {
    transvection(QuadSpaceF2::U2(), 0b01);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_STREQ(e.what(), "transvection requires anisotropic vector");
  }
}

TEST(GroupOrder, SmallExamples) {
  EXPECT_EQ(group_order(orthogonal_group(QuadSpaceF2::U2())), 2);
  EXPECT_EQ(group_order(orthogonal_group(QuadSpaceF2::V2())), 6);
  EXPECT_EQ(group_order(orthogonal_group(QuadSpaceF2::one())), 1);
  EXPECT_EQ(group_order(orthogonal_group(QuadSpaceF2::zero())), 1);
  EXPECT_EQ(group_order(PermGroup(4, {})), 1);
  EXPECT_EQ(group_order(PermGroup(10, {transvection(e10::mod2(), 1)})), 2);
}

TEST(GroupOrder, BruteForceUpToDimensionFour) {
  for (int dim = 1; dim <= 4; ++dim)
    for (const auto& f : normal_forms(dim)) {
      const QuadSpaceF2 V = QuadSpaceF2::from_normal_form(f);
      EXPECT_EQ(group_order(orthogonal_group(V)), Int(brute_force_orthogonal_order(V))) << f.str();
    }
}

TEST(GroupOrder, E10ModTwoMatchesClassicalFormula) {
  EXPECT_EQ(group_order(orthogonal_group(e10::mod2())), orthogonal_plus_order(5));
  EXPECT_EQ(orthogonal_plus_order(5), Int("46998591897600"));
}

TEST(GroupOrder, NotBlockwise) {
  const Int o = group_order(orthogonal_group(QuadSpaceF2::U2()));
  EXPECT_EQ(group_order(orthogonal_group(nf(2, 0, 0, 0))), 72);
  EXPECT_NE(group_order(orthogonal_group(nf(2, 0, 0, 0))), o * o);
}

TEST(GroupOrder, GeneratorsAreIsometries) {
  for (int dim = 1; dim <= 7; ++dim)
    for (const auto& f : normal_forms(dim)) {
      const QuadSpaceF2 V = transport(QuadSpaceF2::from_normal_form(f), random_invertible(dim));
      for (const auto& g : orthogonal_group_generators(V)) EXPECT_TRUE(g.preserves(V)) << f.str();
    }
}

TEST(GroupOrder, Errors) {
  IsometryF2 singular{2, {1, 1}};
  EXPECT_THROW(PermGroup(2, {singular}), InvalidInput);
  EXPECT_THROW(orthogonal_group(nf(8, 0, 1, 0)), InvalidInput);
}

TEST(PermGroup, MembershipAgreesWithClosure) {
  const QuadSpaceF2 V = nf(1, 1, 0, 0);
  const PermGroup G = orthogonal_group(V);
  std::size_t members = 0;
  // Enumerate GL(4, F2) and count the members.
  std::vector<Word> imgs(4);
  for (Word a = 1; a < 16; ++a)
    for (Word b = 1; b < 16; ++b)
      for (Word c = 1; c < 16; ++c)
        for (Word d = 1; d < 16; ++d) {
          IsometryF2 g{4, {a, b, c, d}};
          if (!g.invertible()) continue;
          const bool in = G.contains(g);
          EXPECT_EQ(in, g.preserves(V));
          members += in;
        }
  EXPECT_EQ(Int(members), G.order());
}

TEST(Stabilizer, Examples) {
  const QuadSpaceF2 V = nf(2, 0, 0, 0);
  EXPECT_EQ(pointwise_stabilizer_order(V, {}), 72);
  EXPECT_EQ(stabilizer_order_formula(V, {}), 72);
  EXPECT_EQ(pointwise_stabilizer_order(V, {1, 2, 4, 8}), 1);
  EXPECT_EQ(stabilizer_order_formula(V, {1, 2, 4, 8}), 1);

  const QuadSpaceF2 V5 = nf(5, 0, 0, 0);
  const Word v = 0b11;  // e + f in the first hyperbolic plane
  ASSERT_EQ(V5.q(v), 1);
  // n = 1, k = 0, w = 9, e = 1: twice the order of O(v^perp / 0) = O(U2^4 + [1]).
  const Int expected = 2 * group_order(orthogonal_group(nf(4, 0, 1, 0)));
  EXPECT_EQ(stabilizer_order_formula(V5, {v}), expected);
  EXPECT_EQ(pointwise_stabilizer_order(V5, {v}), expected);
}

TEST(Stabilizer, FormulaAgreesUpToDimensionFour) {
  for (int dim = 2; dim <= 4; dim += 2)
    for (const auto& f : normal_forms(dim)) {
      if (f.e || f.k) continue;
      const QuadSpaceF2 V = QuadSpaceF2::from_normal_form(f);
      for (const auto& W : all_subspaces(dim))
        EXPECT_EQ(stabilizer_order_formula(V, W), pointwise_stabilizer_order(V, W)) << f.str();
    }
}

TEST(Stabilizer, RequiresRegularSpace) {
  try {
    pointwise_stabilizer_order(nf(1, 0, 1, 0), {});
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_STREQ(e.what(), "space is not regular");
  }
  EXPECT_THROW(stabilizer_order_formula(nf(1, 0, 0, 1), {}), InvalidInput);
}

TEST(VectorOrbits, Examples) {
  const QuadSpaceF2 V = nf(5, 0, 0, 0);
  const auto trivial = vector_orbits(std::vector<IsometryF2>{}, V);
  EXPECT_EQ(trivial.size(), 1023u);

  const auto full = vector_orbits(orthogonal_group(V), V);
  ASSERT_EQ(full.size(), 2u);
  std::size_t ones = 0, zeros = 0;
  for (Word x = 1; x < 1024; ++x) (V.q(x) ? ones : zeros)++;
  EXPECT_EQ(ones, 496u);
  EXPECT_EQ(zeros, 527u);
  for (const auto& o : full) {
    const int q0 = V.q(o.front());
    for (Word x : o) EXPECT_EQ(V.q(x), q0);
    EXPECT_EQ(o.size(), q0 ? ones : zeros);
  }

  const auto one = vector_orbits(std::vector<IsometryF2>{transvection(V, 0b11)}, V);
  for (const auto& o : one) EXPECT_LE(o.size(), 2u);
  for (std::size_t i = 1; i < one.size(); ++i) EXPECT_LT(one[i - 1].front(), one[i].front());
}
