#include "hopfo/cotorsion.hpp"

#include <algorithm>

namespace hopfo {

namespace {

Subspace span_columns(const Field& f, std::size_t ambient, const Matrix& columns) {
  if (columns.cols() == 0 || ambient == 0) return Subspace(f, ambient);
  return Subspace::from_columns(columns);
}

Matrix random_combination(const Subspace& s, std::mt19937_64& rng) {
  const Field& f = s.field();
  const std::uint64_t p = f.is_prime() ? f.characteristic() : 7;
  Matrix c(f, s.dim(), 1);
  for (std::size_t i = 0; i < s.dim(); ++i) c.set(i, 0, static_cast<std::int64_t>(rng() % p));
  if (s.dim() == 0) return Matrix(f, s.ambient_dim(), 1);
  return s.basis_columns() * c;
}

bool is_trivial_category(const EquivariantModule& m) { return m.category()->name() == "k"; }

}  // namespace

Presentation presentation(const EquivariantModule& m) {
  FreeCover cover = free_cover(m.rep());
  EquivariantModule free(m.smash(), cover.free);
  Subspace ker = kernel(cover.projection);
  if (cover.free.dim() == 0) ker = Subspace(m.field(), 0);
  SubmoduleData sub = submodule(cover.free, ker);
  return Presentation{m, free, cover.projection, EquivariantModule(m.smash(), sub.module), sub.inclusion};
}

// Hom(F, N) for F free on r generators is N^r: generator c goes to n_j and
// the free basis element (c, b) to b . n_j.
Ext1Data ext1(const EquivariantModule& m, const EquivariantModule& n) {
  if (m.smash() != n.smash()) throw DimensionError("ext1: modules over different smash products");
  const Field& f = m.field();
  Presentation pres = presentation(m);
  const std::size_t dl = m.smash()->dim();
  const std::size_t rank = dl == 0 ? 0 : pres.free.dim() / dl;
  const std::size_t kd = pres.kernel.dim();
  Subspace cocycles = intertwiners(pres.kernel.rep(), n.rep());
  Matrix restricted(f, n.dim() * kd, rank * n.dim());
  for (std::size_t c = 0; c < rank; ++c) {
    for (std::size_t j = 0; j < n.dim(); ++j) {
      Matrix phi(f, n.dim(), pres.free.dim());
      Matrix e = Matrix::unit_vector(f, n.dim(), j);
      for (std::size_t b = 0; b < dl; ++b) phi.set_block(0, c * dl + b, n.rep().action(b) * e);
      restricted.set_block(0, c * n.dim() + j, (phi * pres.inclusion).vectorize());
    }
  }
  Subspace cob = span_columns(f, n.dim() * kd, restricted);
  if (!cocycles.contains(cob)) throw InternalError("ext1: restricted maps are not cocycles");
  Ext1Data out{cocycles.dim() - cob.dim(), pres, cocycles, cob, {}, n.dim()};
  if (out.dim > 0) {
    Subspace cob_in = span_columns(f, cocycles.dim(), cocycles.coordinates_of_columns(cob.basis_columns()));
    auto q = quotient_map(cocycles.dim(), cob_in);
    Matrix reps = cocycles.basis_columns() * q.section;
    for (std::size_t c = 0; c < reps.cols(); ++c)
      out.representatives.push_back(Matrix::unvectorize(reps.col(c), n.dim(), kd));
  }
  return out;
}

ExtensionData extension_from_cocycle(const Ext1Data& data, const EquivariantModule& n, const Matrix& cocycle) {
  const Presentation& pres = data.pres;
  const Field& f = n.field();
  if (cocycle.rows() != n.dim() || cocycle.cols() != pres.kernel.dim())
    throw DimensionError("extension_from_cocycle: cocycle has the wrong shape");
  if (!data.cocycles.contains(cocycle.vectorize())) throw ValidationError("extension_from_cocycle: not a cocycle");
  Representation sum = direct_sum(n.rep(), pres.free.rep());
  Subspace rel = span_columns(f, sum.dim(), vstack({cocycle, -pres.inclusion}));
  QuotientData q = quotient_module(sum, rel);
  EquivariantModule e(n.smash(), q.module);
  Matrix i = q.proj * vstack({Matrix::identity(f, n.dim()), Matrix(f, pres.free.dim(), n.dim())});
  Matrix p = hstack({Matrix(f, pres.module.dim(), n.dim()), pres.projection}) * q.section;
  ExtensionData out = make_extension(n, e, pres.module, i, p);
  if (!out.is_exact) throw InternalError("extension_from_cocycle: the extension is not exact");
  if (out.is_split() != data.is_coboundary(cocycle))
    throw InternalError("extension_from_cocycle: splitting disagrees with the cocycle class");
  return out;
}

Subspace a_split_cocycle_space(const EquivariantModule& l, const EquivariantModule& n) {
  if (l.smash() != n.smash()) throw DimensionError("a_split_cocycle_space: different smash products");
  const auto& h = *l.hopf();
  const auto& cat = *l.category();
  const Field& f = l.field();
  const std::size_t dl = l.dim(), dn = n.dim(), dh = h.dim();
  const std::size_t blk = dl * dn;
  const std::size_t unknowns = dh * blk;
  if (unknowns == 0) return Subspace(f, 0);
  std::vector<Matrix> lh = l.h_actions(), nh = n.h_actions();
  std::vector<Matrix> rows;
  // theta(b_s b_t) - rho_L(b_s) theta(b_t) - theta(b_s) rho_N(b_t) = 0
  for (std::size_t s = 0; s < dh; ++s) {
    for (std::size_t t = 0; t < dh; ++t) {
      Matrix eq(f, blk, unknowns);
      Matrix prod = h.algebra()->left_mult(s).col(t);
      for (std::size_t u = 0; u < dh; ++u) {
        Scalar c = prod.at(u, 0);
        if (!c.is_zero()) eq.set_block(0, u * blk, eq.block(0, u * blk, blk, blk) + Matrix::identity(f, blk).scaled(c));
      }
      eq.set_block(0, t * blk, eq.block(0, t * blk, blk, blk) - left_composition_operator(lh[s], dn));
      eq.set_block(0, s * blk, eq.block(0, s * blk, blk, blk) - right_composition_operator(nh[t], dl));
      rows.push_back(std::move(eq));
    }
  }
  // theta(b_t) rho_N(a) - sum rho_L(b_l . a) theta(b_r) = 0
  if (!is_trivial_category(l)) {
    Representation la = l.forget(), na = n.forget();
    for (std::size_t t = 0; t < dh; ++t) {
      for (std::size_t i = 0; i < cat.dim(); ++i) {
        Matrix eq(f, blk, unknowns);
        eq.set_block(0, t * blk, right_composition_operator(na.action(i), dl));
        Matrix a = Matrix::unit_vector(f, cat.dim(), i);
        for (const auto& term : h.comult(t)) {
          Matrix act = la.act(cat.h_action(term.left) * a);
          eq.set_block(0, term.right * blk,
                       eq.block(0, term.right * blk, blk, blk) - left_composition_operator(act, dn).scaled(term.coeff));
        }
        rows.push_back(std::move(eq));
      }
    }
  }
  // theta(1) = 0
  Matrix unit_eq(f, blk, unknowns);
  for (std::size_t u = 0; u < dh; ++u) {
    Scalar c = h.unit().at(u, 0);
    if (!c.is_zero()) unit_eq.set_block(0, u * blk, Matrix::identity(f, blk).scaled(c));
  }
  rows.push_back(std::move(unit_eq));
  return kernel(vstack(rows));
}

ExtensionData extension_from_a_split_cocycle(const EquivariantModule& l, const EquivariantModule& n,
                                             const Matrix& theta) {
  const auto& h = *l.hopf();
  const Field& f = l.field();
  const std::size_t dl = l.dim(), dn = n.dim(), d = dl + dn, blk = dl * dn;
  if (theta.rows() != h.dim() * blk || theta.cols() != 1)
    throw DimensionError("extension_from_a_split_cocycle: cocycle has the wrong shape");
  std::vector<Matrix> a_action, h_action;
  std::vector<Matrix> la = l.a_actions(), na = n.a_actions();
  for (std::size_t i = 0; i < la.size(); ++i) a_action.push_back(block_diagonal({la[i], na[i]}));
  std::vector<Matrix> lh = l.h_actions(), nh = n.h_actions();
  for (std::size_t t = 0; t < h.dim(); ++t) {
    Matrix a(f, d, d);
    a.set_block(0, 0, lh[t]);
    a.set_block(dl, dl, nh[t]);
    if (blk > 0) a.set_block(0, dl, Matrix::unvectorize(theta.block(t * blk, 0, blk, 1), dl, dn));
    h_action.push_back(std::move(a));
  }
  EquivariantModule e = make_equivariant(l.smash(), std::move(a_action), std::move(h_action));
  Matrix i = vstack({Matrix::identity(f, dl), Matrix(f, dn, dl)});
  Matrix p = hstack({Matrix(f, dn, dl), Matrix::identity(f, dn)});
  return make_extension(l, e, n, i, p);
}

Matrix random_a_split_cocycle(const Subspace& space, std::mt19937_64& rng) { return random_combination(space, rng); }

bool is_projective_module(const EquivariantModule& m) {
  if (m.dim() == 0) return true;
  if (is_trivial_category(m)) return is_projective(m.as_hmodule());
  return projective_section(m.rep()).has_value();
}

bool is_A_projective(const EquivariantModule& m) {
  if (m.dim() == 0 || is_trivial_category(m)) return true;
  return projective_section(m.forget()).has_value();
}

SemiprojectiveVerdict semiprojective_witness(const EquivariantModule& p, const std::vector<EquivariantModule>& acyclic,
                                             int window) {
  SemiprojectiveVerdict v;
  v.a_projective = is_A_projective(p);
  if (!v.a_projective) return v;
  for (std::size_t t = 0; t < acyclic.size(); ++t) {
    if (!is_sigma_acyclic(hom_space(p, acyclic[t]).module, window)) {
      v.failing_target = t;
      break;
    }
  }
  return v;
}

HoveyReport hovey_triple_report(const std::vector<NamedModule>& catalog, int window, std::uint64_t seed) {
  HoveyReport r;
  r.window = window;
  if (catalog.empty()) return r;
  const HopfPtr& hopf = catalog.front().module.hopf();
  if (hopf->is_semisimple()) {
    r.warning = "H is semisimple: every module is projective and Sigma-acyclic; checks are degenerate";
  }
  std::mt19937_64 rng(seed);
  std::vector<EquivariantModule> acyclic;
  std::vector<std::size_t> acyclic_index;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    r.names.push_back(catalog[i].name);
    bool a = is_sigma_acyclic(catalog[i].module, window);
    r.sigma_acyclic.push_back(a);
    if (a) {
      acyclic.push_back(catalog[i].module);
      acyclic_index.push_back(i);
    }
  }
  for (const auto& nm : catalog) {
    r.semiprojective.push_back(semiprojective_witness(nm.module, acyclic, window).witnessed());
    r.projective.push_back(is_projective_module(nm.module));
  }
  auto fail = [&](const std::string& what) { r.failures.push_back(what); };

  // (a) Ext^1(P, T) = 0.
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!r.semiprojective[i]) continue;
    for (std::size_t t : acyclic_index) {
      ++r.checked[0];
      std::size_t d = ext1(catalog[i].module, catalog[t].module).dim;
      if (d != 0)
        fail("(a) ext1(" + catalog[i].name + ", " + catalog[t].name + ") = " + std::to_string(d));
    }
  }
  // (b) witnessed and acyclic => projective; (c) projective => both.
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (r.semiprojective[i] && r.sigma_acyclic[i]) {
      ++r.checked[1];
      if (!r.projective[i]) fail("(b) " + catalog[i].name + " is witnessed and acyclic but not projective");
    }
    if (r.projective[i]) {
      ++r.checked[2];
      if (!r.semiprojective[i] || !r.sigma_acyclic[i])
        fail("(c) " + catalog[i].name + " is projective but not witnessed and acyclic");
    }
  }
  // (d) Ext^1(P, Sigma^n T) = 0 => T(P, Sigma^n T) = 0. Sigma^n T is replaced
  // by T (x) stable_unit_suspension(n), which is stably isomorphic.
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (!r.semiprojective[i]) continue;
    for (std::size_t t : acyclic_index) {
      for (int s = -window; s <= window; ++s) {
        EquivariantModule st = tensor_with_hmodule(catalog[t].module, stable_unit_suspension(hopf, s));
        ++r.checked[3];
        if (ext1(catalog[i].module, st).dim == 0 && stable_hom(catalog[i].module, st).dim != 0)
          fail("(d) " + catalog[i].name + " vs Sigma^" + std::to_string(s) + " " + catalog[t].name);
      }
    }
  }
  // (e) Triv closed under sums, summands and cones.
  for (std::size_t a = 0; a < acyclic.size(); ++a) {
    for (std::size_t b = a; b < acyclic.size() && b < a + 3; ++b) {
      ++r.checked[4];
      if (!is_sigma_acyclic(direct_sum(acyclic[a], acyclic[b]), window))
        fail("(e) sum of " + catalog[acyclic_index[a]].name + " and " + catalog[acyclic_index[b]].name);
      Subspace homs = equivariant_homs(acyclic[a], acyclic[b]);
      Matrix f = Matrix::unvectorize(random_combination(homs, rng), acyclic[b].dim(), acyclic[a].dim());
      ++r.checked[4];
      if (!is_sigma_acyclic(mapping_cone(f, acyclic[a], acyclic[b]).cone, window))
        fail("(e) cone of a map " + catalog[acyclic_index[a]].name + " -> " + catalog[acyclic_index[b]].name);
    }
  }
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = i; j < catalog.size() && j < i + 3; ++j) {
      if (!is_sigma_acyclic(direct_sum(catalog[i].module, catalog[j].module), window)) continue;
      ++r.checked[4];
      if (!r.sigma_acyclic[i] || !r.sigma_acyclic[j])
        fail("(e) summand of acyclic " + catalog[i].name + " + " + catalog[j].name + " is not acyclic");
    }
  }
  return r;
}

ContractiblePairReport contractible_pair_report(const std::vector<NamedModule>& catalog,
                                                std::size_t samples_per_pair, std::uint64_t seed) {
  ContractiblePairReport r;
  std::mt19937_64 rng(seed);
  for (const auto& t : catalog) {
    if (!is_contractible(t.module)) continue;
    r.contractible.push_back(t.name);
    for (const auto& m : catalog) {
      Subspace space = a_split_cocycle_space(t.module, m.module);
      for (std::size_t s = 0; s < samples_per_pair; ++s) {
        Matrix theta = random_a_split_cocycle(space, rng);
        ExtensionData e = extension_from_a_split_cocycle(t.module, m.module, theta);
        ++r.samples;
        if (e.is_split()) {
          ++r.split;
        } else {
          r.failures.push_back("extension of " + m.name + " by " + t.name + " (sample " + std::to_string(s) +
                               ") does not split");
        }
      }
    }
  }
  return r;
}

}  // namespace hopfo
