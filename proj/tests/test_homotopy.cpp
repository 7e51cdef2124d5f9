#include "hopfo/homotopy.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace hopfo;
using support::category_pairs;
using support::pair_smash;

namespace {

EquivariantModule jordan(const HopfPtr& h, std::size_t k) { return from_hmodule(jordan_module(h, k)); }

Matrix random_map(const EquivariantModule& m, const EquivariantModule& n, std::mt19937_64& rng) {
  return support::random_in(equivariant_homs(m, n), n.dim(), m.dim(), rng);
}

// The extension 0 -> J_a -> J_{a+b} -> J_b -> 0 over divided powers.
ExtensionData jordan_extension(const HopfPtr& h, std::size_t a, std::size_t b) {
  const Field& f = h->field();
  Matrix i(f, a + b, a), p(f, b, a + b);
  for (std::size_t r = 0; r < a; ++r) i.set(b + r, r, 1);
  for (std::size_t r = 0; r < b; ++r) p.set(r, r, 1);
  return make_extension(jordan(h, a), jordan(h, a + b), jordan(h, b), i, p);
}

}  // namespace

TEST(Homotopy, Examples) {
  HopfPtr h = divided_power(3);
  const Field& f = h->field();
  EquivariantModule k = jordan(h, 1);
  Matrix id = Matrix::identity(f, 1);
  EXPECT_TRUE(is_homotopic(id, id, k, k).has_value());
  EXPECT_FALSE(is_homotopic(id, Matrix(f, 1, 1), k, k).has_value());
  EquivariantModule reg = from_hmodule(regular_module(h));
  EXPECT_TRUE(is_homotopic(Matrix::identity(f, 3), Matrix(f, 3, 3), reg, reg).has_value());
  EXPECT_TRUE(is_contractible(reg));
  EXPECT_FALSE(is_contractible(k));
  EXPECT_FALSE(is_contractible(jordan(h, 2)));
}

TEST(Homotopy, EquivalenceRelation) {
  std::mt19937_64 rng(3);
  for (const auto& pr : category_pairs()) {
    auto cat = support::equivariant_catalog(pair_smash(pr));
    for (std::size_t a = 0; a < cat.size() && a < 5; ++a) {
      const auto& m = cat[a];
      const auto& n = cat[(a + 1) % cat.size()];
      EquivariantModule c = cone(m);
      Matrix f = random_map(m, n, rng);
      Matrix g = f + random_map(c, n, rng) * cone_inclusion(m);
      Matrix k = g + random_map(c, n, rng) * cone_inclusion(m);
      EXPECT_TRUE(is_homotopic(f, f, m, n).has_value());
      EXPECT_TRUE(is_homotopic(f, g, m, n).has_value());
      EXPECT_TRUE(is_homotopic(g, f, m, n).has_value());
      EXPECT_TRUE(is_homotopic(f, k, m, n).has_value());
    }
  }
}

// Stable Hom between Jordan blocks over k[x]/(x^p) has dimension
// min(a, b, p - a, p - b).
TEST(StableHom, JordanBlocks) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    HopfPtr h = divided_power(p);
    for (std::size_t a = 1; a <= p; ++a) {
      for (std::size_t b = 1; b <= p; ++b) {
        std::size_t expected = std::min({a, b, p - a, p - b});
        StableHomData s = stable_hom(jordan(h, a), jordan(h, b));
        EXPECT_EQ(s.dim, expected) << "p=" << p << " a=" << a << " b=" << b;
        EXPECT_EQ(s.homology_dim, s.dim);
        EXPECT_EQ(s.representatives.size(), s.dim);
      }
    }
  }
}

TEST(StableHom, AgreesAcrossPairs) {
  for (const auto& pr : category_pairs()) {
    auto cat = support::equivariant_catalog(pair_smash(pr));
    for (std::size_t a = 0; a < cat.size(); ++a) {
      for (std::size_t b = 0; b < cat.size(); b += 2) {
        StableHomData s = stable_hom(cat[a], cat[b]);
        EXPECT_EQ(s.dim, s.homology_dim);
        EXPECT_EQ(s.dim + s.null_homotopic_dim, s.equivariant_dim);
        if (is_projective(cat[a].as_hmodule()) && cat[a].category()->name() == "k") EXPECT_EQ(s.dim, 0u);
      }
    }
  }
}

TEST(MappingCone, Shape) {
  HopfPtr h = divided_power(3);
  EquivariantModule m = jordan(h, 2), n = jordan(h, 3);
  Matrix zero(h->field(), 3, 2);
  TriangleData t = mapping_cone(zero, m, n);
  EXPECT_EQ(t.cone.dim(), n.dim() + m.dim() * (h->dim() - 1));
  EXPECT_EQ(t.suspension.dim(), m.dim() * (h->dim() - 1));
  EXPECT_TRUE(is_equivariant_map(t.j, n, t.cone));
  EXPECT_TRUE(is_equivariant_map(t.delta, t.cone, t.suspension));
  EXPECT_TRUE((t.delta * t.j).is_zero());
  // f = 0: the cone is N (+) Sigma M.
  EXPECT_TRUE(find_module_isomorphism(t.cone.rep(), direct_sum(n, suspend(m)).rep()).has_value());
}

TEST(MappingCone, NullHomotopyIffSplits) {
  std::mt19937_64 rng(11);
  std::size_t homotopic = 0, total = 0;
  for (const auto& pr : category_pairs()) {
    auto cat = support::equivariant_catalog(pair_smash(pr));
    for (std::size_t a = 0; a < cat.size(); ++a) {
      const auto& m = cat[a];
      const auto& n = cat[(a * 3 + 1) % cat.size()];
      if (m.dim() * n.dim() > 200) continue;
      ConeSplittingVerdict v = null_homotopy_iff_cone_splits(random_map(m, n, rng), m, n);
      EXPECT_TRUE(v.agree()) << pr.first << "/" << pr.second << " module " << a;
      homotopic += v.homotopy.has_value();
      ++total;
    }
  }
  EXPECT_GT(homotopic, 0u);
  EXPECT_LT(homotopic, total);
  HopfPtr h = divided_power(2);
  EquivariantModule k = jordan(h, 1);
  ConeSplittingVerdict id = null_homotopy_iff_cone_splits(Matrix::identity(h->field(), 1), k, k);
  EXPECT_FALSE(id.homotopy.has_value());
  EXPECT_FALSE(id.cone_retraction.has_value());
}

TEST(Predicates, Quisms) {
  HopfPtr h = divided_power(3);
  EquivariantModule k = jordan(h, 1), reg = from_hmodule(regular_module(h));
  EquivariantModule sum = direct_sum(k, reg);
  Matrix proj = hstack({Matrix::identity(h->field(), 1), Matrix(h->field(), 1, 3)});
  EXPECT_TRUE(is_quism(proj, sum, k));
  EXPECT_TRUE(is_sigma_quism(proj, sum, k, 3));
  SurjectivityVerdict s = surjectivity_transfer(proj, sum, k);
  EXPECT_TRUE(s.cycles_surjective);
  EXPECT_TRUE(s.boundaries_surjective);
  EXPECT_FALSE(is_quism(cone_counit(k), cone(k), k));
  EXPECT_TRUE(is_sigma_acyclic(reg, 3));
  EXPECT_FALSE(is_sigma_acyclic(k, 3));
}

TEST(Predicates, SuspensionRoundTrip) {
  for (const auto& name : {"divided_power:2", "divided_power:3", "sweedler:3"}) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : support::small_modules(h)) {
      if (m.dim() > 6) continue;
      EXPECT_EQ(homology(suspend(desuspend(m))).dim, homology(m).dim) << name;
      EXPECT_EQ(homology(desuspend(suspend(m))).dim, homology(m).dim) << name;
    }
  }
}

TEST(LongExact, JordanExtension) {
  HopfPtr h = divided_power(2);
  ExtensionData e = jordan_extension(h, 1, 1);
  EXPECT_TRUE(e.is_exact);
  EXPECT_TRUE(e.is_A_split());
  EXPECT_FALSE(e.is_split());
  LesVerdict v = long_exact_check(e, 3);
  EXPECT_TRUE(v.ok);
  EXPECT_TRUE(v.nonzero_connecting);
  EXPECT_EQ(v.joints_checked, 7u * 3u);

  HopfPtr h5 = divided_power(5);
  for (std::size_t a = 1; a < 5; ++a) {
    for (std::size_t b = 1; a + b <= 5; ++b) {
      LesVerdict w = long_exact_check(jordan_extension(h5, a, b), 2);
      EXPECT_TRUE(w.ok) << a << "," << b;
    }
  }
}

TEST(LongExact, ConeSequence) {
  for (const auto& pr : category_pairs()) {
    auto cat = support::equivariant_catalog(pair_smash(pr));
    for (std::size_t a = 0; a < cat.size() && a < 4; ++a) {
      const auto& m = cat[a];
      if (m.dim() > 12) continue;
      EquivariantModule c = cone(m), s = suspend(m);
      ExtensionData e = make_extension(m, c, s, cone_inclusion(m), cone_projection(m));
      EXPECT_TRUE(e.is_A_split());
      EXPECT_TRUE(long_exact_check(e, 1).ok) << pr.first << "/" << pr.second;
    }
  }
}

// Oracle check: for a split sequence the long exact sequence degenerates, so
// dim H(Sigma^n M) = dim H(Sigma^n L) + dim H(Sigma^n N).
TEST(LongExact, SplitSequenceAdditivity) {
  HopfPtr h = divided_power(3);
  EquivariantModule l = jordan(h, 1), n = jordan(h, 2);
  EquivariantModule m = direct_sum(l, n);
  const Field& f = h->field();
  Matrix i = vstack({Matrix::identity(f, 1), Matrix(f, 2, 1)});
  Matrix p = hstack({Matrix(f, 2, 1), Matrix::identity(f, 2)});
  ExtensionData e = make_extension(l, m, n, i, p);
  EXPECT_TRUE(e.is_split());
  LesVerdict v = long_exact_check(e, 3);
  EXPECT_TRUE(v.ok);
  EXPECT_FALSE(v.nonzero_connecting);
  for (int s = -2; s <= 2; ++s) {
    // H = ker d / im d^2 over dp3.
    auto dim = [&](const EquivariantModule& x) {
      HModule y = stable_suspend(x.as_hmodule(), s);
      return y.dim() - oracle::rank(oracle::from(y.action(1)), 3) - oracle::rank(oracle::from(y.action(2)), 3);
    };
    EXPECT_EQ(dim(m), dim(l) + dim(n));
  }
}
