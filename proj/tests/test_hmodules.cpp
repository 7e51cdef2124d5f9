#include "hopfo/hmodule.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hopfo;
using support::hopf_names;
using support::small_modules;

namespace {

std::int64_t char_of(const HModule& m) { return static_cast<std::int64_t>(m.field().characteristic()); }

// dim Z - dim B from every basis element's action and rho(lambda), by the
// reference eliminator.
std::size_t homology_oracle(const HModule& m) {
  const auto& h = *m.hopf();
  const std::int64_t p = char_of(m);
  oracle::Mat system;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto a = oracle::from(m.action(i));
    std::int64_t e = static_cast<std::int64_t>(h.counit(i).residue());
    for (std::size_t r = 0; r < m.dim(); ++r) {
      a[r][r] = oracle::md(a[r][r] - e, p);
      system.push_back(a[r]);
    }
  }
  std::size_t dz = oracle::nullspace(system, m.dim(), p).size();
  oracle::Mat lam(m.dim(), oracle::Row(m.dim(), 0));
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto a = oracle::from(m.action(i));
    std::int64_t c = static_cast<std::int64_t>(h.left_integral().at(i, 0).residue());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t s = 0; s < m.dim(); ++s) lam[r][s] = (lam[r][s] + c * a[r][s]) % p;
  }
  return dz - oracle::rank(lam, p);
}

// Dimension of {f : f rho_M(b) = rho_N(b) f for all b} by the reference
// eliminator on the Kronecker system.
std::size_t intertwiner_oracle(const HModule& m, const HModule& n) {
  const std::int64_t p = char_of(m);
  const std::size_t dm = m.dim(), dn = n.dim();
  oracle::Mat system;
  for (std::size_t i = 0; i < m.hopf()->dim(); ++i) {
    auto a = oracle::from(m.action(i));
    auto b = oracle::from(n.action(i));
    // (f a - b f)[r][c] for f[r][c'] at index r * dm + c'
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        oracle::Row row(dm * dn, 0);
        for (std::size_t k = 0; k < dm; ++k) row[r * dm + k] = oracle::md(row[r * dm + k] + a[k][c], p);
        for (std::size_t k = 0; k < dn; ++k) row[k * dm + c] = oracle::md(row[k * dm + c] - b[r][k], p);
        system.push_back(row);
      }
    }
  }
  return oracle::nullspace(system, dm * dn, p).size();
}

std::vector<std::size_t> jordan_oracle(const HModule& m) {
  return oracle::jordan_type(oracle::from(m.action(1)), char_of(m));
}

}  // namespace

TEST(ValidateModule, TrivialAndRegular) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    HModule k = trivial_module(h);
    EXPECT_NO_THROW(validate_module(h, k.actions())) << name;
    EXPECT_NO_THROW(validate_module(h, regular_module(h).actions())) << name;
  }
}

TEST(ValidateModule, RejectsJ4OverDividedPower3) {
  HopfPtr h = divided_power(3);
  Field f = h->field();
  Matrix d(f, 4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) d.set(i + 1, i, 1);
  try {
    validate_module(h, {Matrix::identity(f, 4), d, d * d});
    FAIL() << "J4 accepted";
  } catch (const ValidationError& e) {
    // d * d2 = d^3 = 0 in H but not on J4.
    EXPECT_EQ(std::string(e.what()), "action is not multiplicative at basis pair (1,2)");
  }
}

TEST(Tensor, UnitAndJordan) {
  HopfPtr h = divided_power(3);
  HModule j2 = jordan_module(h, 2);
  HModule kj = tensor(trivial_module(h), j2);
  EXPECT_EQ(kj.actions(), j2.actions());
  HModule jj = tensor(j2, j2);
  EXPECT_EQ(jordan_decompose(jj), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(jordan_oracle(jj), (std::vector<std::size_t>{3, 1}));
  EXPECT_TRUE(find_isomorphism(jj, direct_sum(jordan_module(h, 1), jordan_module(h, 3))));
}

TEST(Tensor, RegularTimesAnythingIsFree) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : small_modules(h)) {
      if (m.dim() > 12) continue;
      auto r = is_free(tensor(regular_module(h), m));
      ASSERT_TRUE(r) << name;
      EXPECT_EQ(*r, m.dim()) << name;
    }
  }
}

TEST(HomModule, InvariantsAreEquivariantMaps) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    auto mods = small_modules(h);
    for (std::size_t a = 0; a < mods.size(); ++a) {
      for (std::size_t b = 0; b < mods.size(); ++b) {
        if (mods[a].dim() * mods[b].dim() > 100) continue;
        HModule hom = hom_module(mods[a], mods[b]);
        ASSERT_FALSE(hom.rep().check_axioms_fast()) << name;
        EXPECT_EQ(invariants(hom), equivariant_maps(mods[a], mods[b])) << name << " " << a << "," << b;
      }
    }
  }
}

TEST(HomModule, Examples) {
  HopfPtr h = divided_power(3);
  HModule j2 = jordan_module(h, 2);
  HModule hom = hom_module(j2, j2);
  EXPECT_EQ(hom.dim(), 4u);
  EXPECT_EQ(invariants(hom).dim(), 2u);
  EXPECT_EQ(intertwiner_oracle(j2, j2), 2u);
  for (const auto& name : hopf_names()) {
    HopfPtr hh = catalog_hopf(name);
    for (const auto& m : small_modules(hh)) {
      EXPECT_TRUE(find_isomorphism(hom_module(trivial_module(hh), m), m)) << name;
    }
  }
}

TEST(HomModule, EquivariantMapsMatchOracle) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    if (!h->field().is_prime()) continue;
    auto mods = small_modules(h);
    for (const auto& m : mods) {
      for (const auto& n : mods) {
        if (m.dim() * n.dim() > 64) continue;
        EXPECT_EQ(equivariant_maps(m, n).dim(), intertwiner_oracle(m, n)) << name;
      }
    }
  }
}

TEST(Homology, RegularIsAcyclic) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    EXPECT_EQ(homology(regular_module(h)).dim, 0u) << name;
    std::size_t expected = h->is_semisimple() ? 0 : 1;
    EXPECT_EQ(homology(trivial_module(h)).dim, expected) << name;
  }
}

TEST(Homology, JordanBlocks) {
  for (std::uint64_t p : {2, 3, 5}) {
    HopfPtr h = divided_power(p);
    for (std::size_t k = 1; k <= p; ++k) {
      HModule j = jordan_module(h, k);
      std::size_t expected = k < p ? 1 : 0;
      EXPECT_EQ(homology(j).dim, expected) << p << " " << k;
      EXPECT_EQ(homology_oracle(j), expected);
    }
  }
}

TEST(Homology, MatchesOracleOnCatalog) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    if (!h->field().is_prime()) continue;
    for (const auto& m : small_modules(h)) EXPECT_EQ(homology(m).dim, homology_oracle(m)) << name;
  }
}

TEST(Cone, SuspendedConesAreAcyclic) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : small_modules(h)) {
      if (m.dim() > 4 || h->dim() > 5) continue;
      HModule c = cone(m);
      for (int n = -3; n <= 3; ++n) EXPECT_EQ(homology(suspend_n(c, n)).dim, 0u) << name << " n=" << n;
    }
  }
}

TEST(Cone, Examples) {
  HopfPtr h = divided_power(3);
  HModule s = suspend(jordan_module(h, 2));
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_EQ(jordan_decompose(s), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(jordan_oracle(s), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(homology(s).dim, 1u);
  EXPECT_EQ(cone(zero_module(h)).dim(), 0u);
  EXPECT_EQ(suspend(zero_module(h)).dim(), 0u);
  EXPECT_EQ(desuspend(jordan_module(h, 2)).dim(), 4u);
  HModule m = jordan_module(h, 2);
  EXPECT_TRUE(is_equivariant(cone_inclusion(m), m, cone(m)));
  EXPECT_TRUE(is_equivariant(cone_projection(m), cone(m), suspend(m)));
  EXPECT_TRUE(is_equivariant(cone_counit(m), cone(m), m));
  EXPECT_TRUE((cone_projection(m) * cone_inclusion(m)).is_zero());
}

TEST(Freeness, Examples) {
  for (std::uint64_t p : {2, 3, 5}) {
    HopfPtr h = divided_power(p);
    EXPECT_FALSE(is_projective(trivial_module(h)));
    EXPECT_FALSE(has_projective_section(trivial_module(h)));
    EXPECT_FALSE(is_free(trivial_module(h)));
    EXPECT_EQ(is_free(free_module(h, 3)), std::optional<std::size_t>(3));
  }
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : small_modules(h)) {
      EXPECT_EQ(is_projective(direct_sum(m, regular_module(h))), is_projective(m)) << name;
    }
  }
}

// The character-count criterion and the section solve agree.
TEST(Freeness, ProjectivityCriteriaAgree) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : small_modules(h)) {
      if (m.dim() > 20) continue;
      EXPECT_EQ(is_projective(m), has_projective_section(m)) << name << " dim " << m.dim();
    }
  }
}

TEST(Switching, Examples) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    Field f = h->field();
    Matrix rk = switching_iso(trivial_module(h));
    EXPECT_TRUE(rk.is_identity()) << name;
    for (const auto& v : small_modules(h)) {
      if (v.dim() * h->dim() > 80) continue;
      Matrix r = switching_iso(v);
      EXPECT_EQ(rank(r), r.rows());
      EXPECT_EQ(r * kronecker(Matrix::identity(f, v.dim()), h->left_integral()),
                kronecker(h->left_integral(), Matrix::identity(f, v.dim())));
    }
  }
  HopfPtr h2 = divided_power(2);
  Matrix r = switching_iso(regular_module(h2));
  EXPECT_EQ(r.rows(), 4u);
  EXPECT_EQ(rank(r), 4u);
}

TEST(Switching, Naturality) {
  std::mt19937_64 rng(17);
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    Field f = h->field();
    auto mods = small_modules(h);
    for (const auto& v : mods) {
      for (const auto& w : mods) {
        if (v.dim() * h->dim() > 40 || w.dim() * h->dim() > 40) continue;
        Matrix g = support::random_equivariant(v, w, rng);
        Matrix lhs = kronecker(Matrix::identity(f, h->dim()), g) * switching_iso(v);
        Matrix rhs = switching_iso(w) * kronecker(g, Matrix::identity(f, h->dim()));
        EXPECT_EQ(lhs, rhs) << name;
      }
    }
  }
}

TEST(Jordan, Examples) {
  HopfPtr h = divided_power(5);
  EXPECT_EQ(jordan_decompose(regular_module(h)), std::vector<std::size_t>{5});
  HModule m = direct_sum(jordan_module(h, 2), jordan_module(h, 1));
  EXPECT_EQ(jordan_decompose(m), (std::vector<std::size_t>{2, 1}));
  EXPECT_THROW(jordan_decompose(trivial_module(sweedler(3))), ValidationError);
}

TEST(SplitOffTrivials, Examples) {
  for (const auto& name : hopf_names()) {
    SCOPED_TRACE(name);
    HopfPtr h = catalog_hopf(name);
    auto r1 = split_off_trivials(direct_sum(trivial_module(h), regular_module(h)));
    if (h->is_semisimple()) continue;
    EXPECT_EQ(r1.trivial_multiplicity, 1u);
    EXPECT_TRUE(is_projective(r1.complement));
    auto r2 = split_off_trivials(tensor(counit_kernel_module(h).module, quotient_by_integral(h).module));
    EXPECT_EQ(r2.trivial_multiplicity, 1u);
    EXPECT_TRUE(is_projective(r2.complement));
    EXPECT_EQ(split_off_trivials(regular_module(h)).trivial_multiplicity, 0u);
  }
}

// An equivariant f maps Z(M) into Z(N) and B(M) into B(N).
TEST(HmoduleProperties, HomologyFunctorial) {
  std::mt19937_64 rng(5);
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    auto mods = small_modules(h);
    for (const auto& m : mods) {
      for (const auto& n : mods) {
        if (m.dim() * n.dim() > 100) continue;
        Matrix f = support::random_equivariant(m, n, rng);
        auto hm = homology(m);
        auto hn = homology(n);
        if (hm.cycles.dim() > 0) EXPECT_TRUE(hn.cycles.contains(Subspace::from_columns(f * hm.cycles.basis_columns())));
        if (hm.boundaries.dim() > 0) {
          EXPECT_TRUE(hn.boundaries.contains(Subspace::from_columns(f * hm.boundaries.basis_columns())));
        }
      }
    }
  }
}

// Hom(M,N) (x) V -> Hom(M, N (x) V), f (x) v -> (m -> f(m) (x) v), is equivariant.
TEST(HmoduleProperties, SuspensionAndHom) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    auto mods = small_modules(h);
    std::vector<HModule> shifts{quotient_by_integral(h).module, counit_kernel_module(h).module};
    for (const auto& m : mods) {
      for (const auto& n : mods) {
        for (const auto& v : shifts) {
          const std::size_t dm = m.dim(), dn = n.dim(), dv = v.dim();
          if (dm * dn * dv > 150) continue;
          Matrix perm(h->field(), dm * dn * dv, dm * dn * dv);
          for (std::size_t a = 0; a < dn; ++a)
            for (std::size_t b = 0; b < dm; ++b)
              for (std::size_t c = 0; c < dv; ++c) perm.set((a * dv + c) * dm + b, (a * dm + b) * dv + c, 1);
          EXPECT_TRUE(is_equivariant(perm, tensor(hom_module(m, n), v), hom_module(m, tensor(n, v)))) << name;
        }
      }
    }
  }
}

TEST(HmoduleProperties, ProjectiveImpliesAcyclic) {
  for (const auto& name : hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : small_modules(h)) {
      if (is_projective(m)) EXPECT_EQ(homology(m).dim, 0u) << name;
    }
  }
}

// Random p-complexes: dim H(M) equals the number of Jordan blocks of size < p.
TEST(HmoduleProperties, JordanOracleConsistency) {
  std::mt19937_64 rng(99);
  int cases = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    HopfPtr h = divided_power(p);
    std::uniform_int_distribution<std::size_t> size(1, p);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    for (int t = 0; t < 40; ++t) {
      std::vector<HModule> blocks;
      std::size_t nb = count(rng);
      for (std::size_t b = 0; b < nb; ++b) blocks.push_back(jordan_module(h, size(rng)));
      HModule m = support::conjugate(direct_sum(blocks), rng);
      auto sizes = jordan_oracle(m);
      std::size_t small = std::count_if(sizes.begin(), sizes.end(), [&](auto s) { return s < p; });
      EXPECT_EQ(homology(m).dim, small);
      EXPECT_EQ(jordan_decompose(m), sizes);
      ++cases;
    }
  }
  EXPECT_GE(cases, 100);
}

TEST(StableSuspension, ProjectiveFreePart) {
  for (const auto& name : support::hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    EXPECT_EQ(projective_free_part(free_module(h, 2)).dim(), 0u) << name;
    HModule k = trivial_module(h);
    EXPECT_EQ(projective_free_part(direct_sum(k, regular_module(h))).dim(), h->is_semisimple() ? 0u : 1u) << name;
    for (const auto& m : support::small_modules(h)) {
      HModule r = projective_free_part(m);
      EXPECT_EQ(homology(r).dim, homology(m).dim) << name;
      if (!h->is_semisimple() && r.dim() > 0) {
        // No projective summand is left: the character-count test fails on
        // every nonzero summand, so in particular r itself is not projective.
        EXPECT_FALSE(is_projective(r)) << name;
      }
    }
  }
}

TEST(StableSuspension, MatchesLiteralSuspension) {
  for (const auto& name : support::hopf_names()) {
    HopfPtr h = catalog_hopf(name);
    for (const auto& m : support::small_modules(h)) {
      std::size_t literal = m.dim();
      for (int n = 1; n <= 3 && literal * (h->dim() - 1) <= 150; ++n) {
        literal *= h->dim() - 1;
        EXPECT_EQ(homology(stable_suspend(m, n)).dim, homology(suspend_n(m, n)).dim) << name << " n=" << n;
        EXPECT_EQ(homology(stable_suspend(m, -n)).dim, homology(suspend_n(m, -n)).dim) << name << " n=" << -n;
      }
    }
    if (h->family() == "divided_power") {
      // Sigma k = J_{p-1} and Sigma^2 k = k stably.
      EXPECT_EQ(stable_unit_suspension(h, 1).dim(), h->dim() - 1);
      EXPECT_EQ(stable_unit_suspension(h, 2).dim(), 1u);
      EXPECT_EQ(stable_unit_suspension(h, -2).dim(), 1u);
    }
    // Taft algebras are Nakayama: Sigma k = H/(lambda) minus projectives is
    // uniserial of length n - 1, and Sigma^2 k is one-dimensional.
    if (name == "sweedler:3" || name.rfind("taft", 0) == 0) {
      const std::size_t n = h->dim() == 4 ? 2 : 4;
      EXPECT_EQ(stable_unit_suspension(h, 1).dim(), n - 1) << name;
      EXPECT_EQ(stable_unit_suspension(h, 2).dim(), 1u) << name;
    }
  }
}
