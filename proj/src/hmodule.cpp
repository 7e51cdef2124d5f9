#include "hopfo/hmodule.hpp"

#include <map>
#include <mutex>
#include <random>

namespace hopfo {

namespace {

void same_hopf(const HModule& m, const HModule& n, const char* what) {
  if (m.hopf() != n.hopf()) throw DimensionError(std::string(what) + ": modules over different Hopf algebras");
}

Matrix counit_row(const HopfAlgebra& h) {
  Matrix r(h.field(), 1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) r.set(0, i, h.counit(i));
  return r;
}

// Stacked (rho(g) - epsilon(g)) over the algebra generators.
Matrix invariance_system(const HModule& m) {
  const auto& h = *m.hopf();
  const auto& gens = h.algebra()->generators();
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Scalar e = h.counit_of(gens[g]);
    blocks.push_back(m.rep().generator_actions()[g] - Matrix::identity(m.field(), m.dim()).scaled(e));
  }
  if (blocks.empty()) return Matrix(m.field(), 0, m.dim());
  return vstack(blocks);
}

// Functionals r with r rho(g) = epsilon(g) r are the kernel of this matrix.
Matrix coinvariance_system(const HModule& m) {
  const auto& h = *m.hopf();
  const auto& gens = h.algebra()->generators();
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Scalar e = h.counit_of(gens[g]);
    blocks.push_back((m.rep().generator_actions()[g] - Matrix::identity(m.field(), m.dim()).scaled(e)).transpose());
  }
  if (blocks.empty()) return Matrix(m.field(), 0, m.dim());
  return vstack(blocks);
}

}  // namespace

HModule::HModule(HopfPtr hopf, Representation rep) : hopf_(std::move(hopf)), rep_(std::move(rep)) {
  if (rep_.algebra() != hopf_->algebra()) throw DimensionError("representation is not over this Hopf algebra");
}

HModule validate_module(const HopfPtr& hopf, std::vector<Matrix> action) {
  if (action.size() != hopf->dim()) {
    throw ValidationError("expected " + std::to_string(hopf->dim()) + " action matrices, got " +
                          std::to_string(action.size()));
  }
  const std::size_t d = action.empty() ? 0 : action[0].rows();
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i].rows() != d || action[i].cols() != d) {
      throw ValidationError("action matrix " + std::to_string(i) + " is not " + std::to_string(d) +
                            "x" + std::to_string(d));
    }
  }
  return HModule(hopf, validated_representation(hopf->algebra(), d, std::move(action)));
}

HModule zero_module(const HopfPtr& hopf) { return HModule(hopf, zero_representation(hopf->algebra())); }

HModule trivial_module(const HopfPtr& hopf) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < hopf->dim(); ++i) {
    Matrix a(hopf->field(), 1, 1);
    a.set(0, 0, hopf->counit(i));
    action.push_back(a);
  }
  return HModule(hopf, Representation(hopf->algebra(), 1, std::move(action)));
}

HModule regular_module(const HopfPtr& hopf) {
  return HModule(hopf, regular_representation(hopf->algebra()));
}

HModule free_module(const HopfPtr& hopf, std::size_t rank) {
  return HModule(hopf, free_representation(hopf->algebra(), rank));
}

HModule direct_sum(const HModule& m, const HModule& n) {
  same_hopf(m, n, "direct_sum");
  return HModule(m.hopf(), direct_sum(m.rep(), n.rep()));
}

HModule direct_sum(const std::vector<HModule>& ms) {
  if (ms.empty()) throw DimensionError("direct_sum of an empty list");
  HModule out = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) out = direct_sum(out, ms[i]);
  return out;
}

QuotientModuleData quotient_by_integral(const HopfPtr& hopf) {
  auto q = quotient_module(regular_representation(hopf->algebra()), hopf->integral_ideal());
  return {HModule(hopf, std::move(q.module)), std::move(q.proj), std::move(q.section)};
}

SubmoduleWithInclusion counit_kernel_module(const HopfPtr& hopf) {
  auto s = submodule(regular_representation(hopf->algebra()), hopf->counit_kernel());
  return {HModule(hopf, std::move(s.module)), std::move(s.inclusion)};
}

HModule tensor(const HModule& m, const HModule& n) {
  same_hopf(m, n, "tensor");
  const auto& h = *m.hopf();
  std::vector<Matrix> action;
  action.reserve(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix a(m.field(), m.dim() * n.dim(), m.dim() * n.dim());
    for (const auto& t : h.comult(i)) a.add_scaled(t.coeff, kronecker(m.action(t.left), n.action(t.right)));
    action.push_back(std::move(a));
  }
  return HModule(m.hopf(), Representation(h.algebra(), m.dim() * n.dim(), std::move(action)));
}

Matrix tensor_action(const HModule& m, const HModule& n, const Matrix& element) {
  const auto& h = *m.hopf();
  Matrix a(m.field(), m.dim() * n.dim(), m.dim() * n.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Scalar c = element.at(i, 0);
    if (c.is_zero()) continue;
    for (const auto& t : h.comult(i)) a.add_scaled(c * t.coeff, kronecker(m.action(t.left), n.action(t.right)));
  }
  return a;
}

HModule tensor(const std::vector<HModule>& ms) {
  if (ms.empty()) throw DimensionError("tensor of an empty list");
  HModule out = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) out = tensor(out, ms[i]);
  return out;
}

HModule hom_module(const HModule& m, const HModule& n) {
  same_hopf(m, n, "hom_module");
  const auto& h = *m.hopf();
  const std::size_t d = m.dim() * n.dim();
  // rho_M(S^-1 b_l)^T for every l.
  std::vector<Matrix> sinv_t;
  for (std::size_t l = 0; l < h.dim(); ++l) sinv_t.push_back(m.act(h.antipode_inverse().col(l)).transpose());
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix a(m.field(), d, d);
    for (const auto& t : h.comult(i)) a.add_scaled(t.coeff, kronecker(n.action(t.right), sinv_t[t.left]));
    action.push_back(std::move(a));
  }
  return HModule(m.hopf(), Representation(h.algebra(), d, std::move(action)));
}

Subspace equivariant_maps(const HModule& m, const HModule& n) {
  same_hopf(m, n, "equivariant_maps");
  return intertwiners(m.rep(), n.rep());
}

bool is_equivariant(const Matrix& f, const HModule& m, const HModule& n) {
  return is_intertwiner(f, m.rep(), n.rep());
}

Subspace invariants(const HModule& m) {
  if (m.dim() == 0) return Subspace(m.field(), 0);
  return kernel(invariance_system(m));
}

HomologyData homology(const HModule& m) {
  const auto& f = m.field();
  HomologyData out{invariants(m), image(m.act(m.hopf()->left_integral())), 0, Matrix(f, m.dim(), 0),
                   Matrix(f, 0, m.dim())};
  if (!out.cycles.contains(out.boundaries)) throw InternalError("B(M) is not contained in Z(M)");
  const std::size_t dz = out.cycles.dim();
  Subspace b_in_z = Subspace::from_columns(out.cycles.coordinates_of_columns(out.boundaries.basis_columns()));
  if (out.boundaries.dim() == 0) b_in_z = Subspace(f, dz);
  auto q = quotient_map(dz, b_in_z);
  out.dim = dz - out.boundaries.dim();
  out.representatives = out.cycles.basis_columns() * q.section;
  if (dz == 0) out.representatives = Matrix(f, m.dim(), 0);
  Matrix select(f, dz, m.dim());
  for (std::size_t r = 0; r < dz; ++r) select.set(r, out.cycles.pivots()[r], 1);
  out.to_homology = q.proj * select;
  return out;
}

Matrix induced_on_homology(const Matrix& f, const HomologyData& hm, const HomologyData& hn) {
  if (hm.dim == 0 || hn.dim == 0) return Matrix(f.field(), hn.dim, hm.dim);
  return hn.to_homology * f * hm.representatives;
}

HModule cone(const HModule& m) { return tensor(m, regular_module(m.hopf())); }
HModule suspend(const HModule& m) { return tensor(m, quotient_by_integral(m.hopf()).module); }
HModule desuspend(const HModule& m) { return tensor(m, counit_kernel_module(m.hopf()).module); }

HModule suspend_n(const HModule& m, int n) {
  if (n == 0) return m;
  HModule factor = n > 0 ? quotient_by_integral(m.hopf()).module : counit_kernel_module(m.hopf()).module;
  HModule out = m;
  for (int i = 0; i < std::abs(n); ++i) out = tensor(out, factor);
  return out;
}

Matrix cone_inclusion(const HModule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim()), m.hopf()->left_integral());
}

Matrix cone_projection(const HModule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim()), quotient_by_integral(m.hopf()).proj);
}

Matrix cone_counit(const HModule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim()), counit_row(*m.hopf()));
}

std::optional<std::size_t> is_free(const HModule& m) {
  if (m.dim() % m.hopf()->dim() != 0) return std::nullopt;
  if (!free_basis_iso(m.rep())) return std::nullopt;
  return m.dim() / m.hopf()->dim();
}

HModule character_module(const HopfPtr& hopf, std::size_t i) {
  const Matrix& chi = hopf->characters().at(i);
  std::vector<Matrix> action;
  for (std::size_t b = 0; b < hopf->dim(); ++b) {
    Matrix a(hopf->field(), 1, 1);
    a.set(0, 0, chi.at(0, b));
    action.push_back(a);
  }
  return HModule(hopf, Representation(hopf->algebra(), 1, std::move(action)));
}

// When every simple module is a character, top(M) has multiplicity
// dim Hom(M, chi) at chi and the projective cover of M has dimension
// (dim H / #characters) * dim top(M); M is projective iff that equals dim M.
bool is_projective(const HModule& m) {
  const auto& h = *m.hopf();
  if (m.dim() == 0 || h.is_semisimple()) return true;
  if (!h.simples_are_characters()) return projective_section(m.rep()).has_value();
  std::size_t top = 0;
  for (std::size_t i = 0; i < h.characters().size(); ++i) {
    top += intertwiners(m.rep(), character_module(m.hopf(), i).rep()).dim();
  }
  return m.dim() * h.characters().size() == h.dim() * top;
}

bool has_projective_section(const HModule& m) { return projective_section(m.rep()).has_value(); }

Matrix switching_element(const HopfAlgebra& h) {
  const auto& f = h.field();
  const std::size_t n = h.dim();
  const auto& alg = *h.algebra();
  const Matrix& lam = h.left_integral();
  // Unknown a in H; equation sum lambda2 (x) a S^-1(lambda1) = sum lambda1 (x) S(lambda2).
  Matrix system(f, n * n, n);
  Matrix rhs(f, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (lam.at(i, 0).is_zero()) continue;
    for (const auto& t : h.comult(i)) {
      Scalar c = lam.at(i, 0) * t.coeff;
      Matrix sinv = h.antipode_inverse().col(t.left);
      for (std::size_t a = 0; a < n; ++a) {
        Matrix col = kronecker(h.basis_vector(t.right), alg.left_mult(a) * sinv);
        system.set_block(0, a, system.col(a) + col.scaled(c));
      }
      rhs += kronecker(h.basis_vector(t.left), h.antipode().col(t.right)).scaled(c);
    }
  }
  auto a = solve(system, rhs);
  if (!a || rank(system) != n) throw InternalError("no unique switching element");
  return *a;
}

// r(v (x) h) = h2 (x) h3 a S^-1(h1) v: the composite of the untwisting
// V (x) H -> V_triv (x) H, v (x) h -> S^-1(h1) v (x) h2, the flip, the
// natural automorphism h (x) v -> h (x) a v, and the inverse of
// H (x) V -> H (x) V_triv, h (x) v -> h1 (x) S(h2) v. The element a is the
// one making the integral square commute; it is 1 when H is unimodular.
Matrix switching_iso(const HModule& v) {
  const auto& h = *v.hopf();
  const std::size_t dh = h.dim();
  const std::size_t dv = v.dim();
  const auto& f = v.field();
  Matrix r(f, dh * dv, dv * dh);
  Matrix twist = v.act(switching_element(h));
  std::vector<Matrix> sinv;
  for (std::size_t l = 0; l < dh; ++l) sinv.push_back(twist * v.act(h.antipode_inverse().col(l)));
  for (std::size_t i = 0; i < dh; ++i) {
    for (const auto& t : h.comult(i)) {
      for (const auto& u : h.comult(t.right)) {
        Matrix x = v.action(u.right) * sinv[t.left];
        Scalar c = t.coeff * u.coeff;
        for (std::size_t row = 0; row < dv; ++row) {
          for (std::size_t j = 0; j < dv; ++j) {
            Scalar e = x.at(row, j);
            if (!e.is_zero()) r.add_to(u.left * dv + row, j * dh + i, c * e);
          }
        }
      }
    }
  }
  HModule reg = regular_module(v.hopf());
  for (const auto& g : h.algebra()->generators()) {
    if (!(r * tensor_action(v, reg, g) == tensor_action(reg, v, g) * r)) {
      throw InternalError("switching map is not equivariant");
    }
  }
  if (rank(r) != r.rows()) throw InternalError("switching map is not invertible");
  Matrix square_lhs = r * kronecker(Matrix::identity(f, dv), h.left_integral());
  Matrix square_rhs = kronecker(h.left_integral(), Matrix::identity(f, dv));
  if (!(square_lhs == square_rhs)) throw InternalError("switching map does not carry v (x) lambda to lambda (x) v");
  return r;
}

std::vector<std::size_t> jordan_decompose(const HModule& m) {
  const auto& h = *m.hopf();
  if (h.family() != "divided_power") throw ValidationError("jordan_decompose needs a divided_power algebra");
  const std::size_t n = m.dim();
  std::vector<std::size_t> ranks{n};
  Matrix power = Matrix::identity(m.field(), n);
  while (ranks.back() > 0) {
    power = power * m.action(1);
    ranks.push_back(rank(power));
  }
  std::vector<std::size_t> sizes;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    // blocks of size exactly k: (r_{k-1} - r_k) - (r_k - r_{k+1})
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least_k - at_least_next; ++c) sizes.push_back(k);
  }
  return sizes;
}

HModule jordan_module(const HopfPtr& hopf, std::size_t k) {
  if (hopf->family() != "divided_power") throw ValidationError("Jordan modules need a divided_power algebra");
  const auto& f = hopf->field();
  Matrix d(f, k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) d.set(i + 1, i, 1);
  std::vector<Matrix> action;
  Matrix power = Matrix::identity(f, k);
  for (std::size_t i = 0; i < hopf->dim(); ++i) {
    action.push_back(power);
    power = power * d;
  }
  return validate_module(hopf, std::move(action));
}

DecompositionReport split_off_trivials(const HModule& m) {
  const auto& f = m.field();
  const std::size_t dm = m.dim();
  std::vector<Matrix> sections;     // k -> M
  std::vector<Matrix> retractions;  // M -> k
  HModule current = m;
  Matrix proj = Matrix::identity(f, dm);  // M -> current
  Matrix incl = Matrix::identity(f, dm);  // current -> M
  while (current.dim() > 0) {
    Subspace z = invariants(current);
    Subspace co = kernel(coinvariance_system(current));  // functionals r with r rho = eps r
    if (z.dim() == 0 || co.dim() == 0) break;
    Matrix pairing = co.basis() * z.basis_columns();
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (std::size_t a = 0; a < pairing.rows() && !hit; ++a) {
      for (std::size_t b = 0; b < pairing.cols() && !hit; ++b) {
        if (!pairing.at(a, b).is_zero()) hit = {{a, b}};
      }
    }
    if (!hit) break;
    Matrix s = z.basis_vector(hit->second);
    Matrix r = co.basis().row(hit->first).scaled(pairing.at(hit->first, hit->second).inverse());
    sections.push_back(incl * s);
    retractions.push_back(r * proj);
    Matrix idem = Matrix::identity(f, current.dim()) - s * r;
    Subspace ker_r = kernel(r);
    auto sub = submodule(current.rep(), ker_r);
    proj = ker_r.coordinates_of_columns(idem) * proj;
    incl = incl * sub.inclusion;
    current = HModule(m.hopf(), std::move(sub.module));
  }
  const std::size_t a = sections.size();
  std::vector<Matrix> fwd = retractions;
  fwd.push_back(proj);
  std::vector<Matrix> bwd = sections;
  bwd.push_back(incl);
  DecompositionReport rep{a, current, vstack(fwd), hstack(bwd)};
  if (!(rep.forward * rep.backward).is_identity() || !(rep.backward * rep.forward).is_identity()) {
    throw InternalError("split_off_trivials: witnesses are not inverse");
  }
  std::vector<HModule> parts(a, trivial_module(m.hopf()));
  parts.push_back(current);
  HModule target = direct_sum(parts);
  if (!is_equivariant(rep.forward, m, target)) throw InternalError("split_off_trivials: witness not equivariant");
  return rep;
}

std::optional<std::pair<Matrix, Matrix>> find_isomorphism(const HModule& m, const HModule& n) {
  same_hopf(m, n, "find_isomorphism");
  return find_module_isomorphism(m.rep(), n.rep());
}

// h e -> h e y is injective on H e iff socle . y != 0. Taking y = e m_j for
// the independent columns m_j of rho(socle) gives an injective map from a
// projective, whose image splits off; the quotient drops those summands.
HModule projective_free_part(const HModule& m) {
  const auto& h = *m.hopf();
  if (m.dim() == 0) return m;
  if (h.is_semisimple()) return zero_module(m.hopf());
  if (!h.simples_are_characters()) return m;
  HModule cur = m;
  while (cur.dim() > 0) {
    std::vector<Matrix> gens;
    for (const auto& pc : h.projective_covers()) {
      Matrix e = cur.act(pc.idempotent);
      for (std::size_t col : rref(cur.act(pc.socle)).pivots) gens.push_back(e.col(col));
    }
    if (gens.empty()) break;
    Subspace sub = generated_submodule(cur.rep(), hstack(gens));
    if (sub.dim() == 0) throw InternalError("projective summand search made no progress");
    cur = HModule(m.hopf(), quotient_module(cur.rep(), sub).module);
  }
  return cur;
}

HModule stable_unit_suspension(const HopfPtr& hopf, int n) {
  static std::mutex mu;
  static std::map<std::pair<const HopfAlgebra*, int>, HModule> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({hopf.get(), n});
    if (it != cache.end()) return it->second;
  }
  HModule out = trivial_module(hopf);
  if (n != 0) {
    HModule prev = stable_unit_suspension(hopf, n > 0 ? n - 1 : n + 1);
    HModule factor = n > 0 ? quotient_by_integral(hopf).module : counit_kernel_module(hopf).module;
    out = projective_free_part(tensor(prev, factor));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(hopf.get(), n), out);
  return out;
}

HModule stable_suspend(const HModule& m, int n) {
  if (n == 0) return m;
  return tensor(m, stable_unit_suspension(m.hopf(), n));
}

}  // namespace hopfo
