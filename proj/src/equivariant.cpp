#include "hopfo/equivariant.hpp"

#include <map>
#include <mutex>

namespace hopfo {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Matrix counit_row(const HopfAlgebra& h) {
  Matrix r(h.field(), 1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) r.set(0, i, h.counit(i));
  return r;
}

Matrix combine(const Field& f, std::size_t dim, const std::vector<Matrix>& basis_action, const Matrix& element) {
  Matrix out(f, dim, dim);
  for (std::size_t i = 0; i < basis_action.size(); ++i) {
    Scalar c = element.at(i, 0);
    if (!c.is_zero()) out.add_scaled(c, basis_action[i]);
  }
  return out;
}

// rho(a (x) h) = rho_A(a) rho_H(h), no checks.
EquivariantModule assemble(const SmashPtr& smash, std::size_t dim, const std::vector<Matrix>& a_action,
                           const std::vector<Matrix>& h_action) {
  std::vector<Matrix> action;
  action.reserve(a_action.size() * h_action.size());
  for (const auto& a : a_action)
    for (const auto& h : h_action) action.push_back(a * h);
  return EquivariantModule(smash, Representation(smash->algebra(), dim, std::move(action)));
}

EquivariantModule checked(EquivariantModule m, const char* what) {
  if (auto err = m.rep().check_axioms_fast()) throw InternalError(std::string(what) + " produced an invalid module: " + *err);
  return m;
}

void same_smash(const EquivariantModule& m, const EquivariantModule& n, const char* what) {
  if (m.smash() != n.smash()) throw DimensionError(std::string(what) + ": modules over different smash products");
}

// The element S^-1(b_l) . b_i of A, for every l (one column per l).
Matrix twisted_morphisms(const HModuleCategory& cat, std::size_t i) {
  const auto& h = *cat.hopf();
  Matrix out(cat.field(), cat.dim(), h.dim());
  Matrix e = Matrix::unit_vector(cat.field(), cat.dim(), i);
  for (std::size_t l = 0; l < h.dim(); ++l) out.set_block(0, l, cat.act_on_morphisms(h.antipode_inverse().col(l)) * e);
  return out;
}

}  // namespace

CategoryPtr HModuleCategory::validate(const HopfPtr& hopf, const RawCategory& raw) {
  const Field& f = hopf->field();
  const std::size_t n = raw.basis.size();
  const std::size_t objs = raw.objects.size();
  if (objs == 0) throw ValidationError("category has no objects");
  if (objs > 16) throw ValidationError("categories are limited to 16 objects");
  if (raw.source.size() != n || raw.target.size() != n)
    throw ValidationError("source/target lists must have one entry per basis element");
  for (std::size_t i = 0; i < n; ++i)
    if (raw.source[i] >= objs || raw.target[i] >= objs)
      throw ValidationError("basis element " + std::to_string(i) + " has an unknown source or target");
  if (raw.identities.size() != objs) throw ValidationError("every object needs an identity morphism");
  for (std::size_t x = 0; x < objs; ++x) {
    std::size_t id = raw.identities[x];
    if (id >= n || raw.source[id] != x || raw.target[id] != x)
      throw ValidationError("identity of object " + raw.objects[x] + " is not an endomorphism of it");
  }

  std::vector<Matrix> left(n, Matrix(f, n, n));
  for (const auto& t : raw.compose) {
    if (t.i >= n || t.j >= n || t.k >= n) throw ValidationError("composition term index out of range");
    if (t.coeff.is_zero()) continue;
    if (raw.source[t.i] != raw.target[t.j])
      throw ValidationError("composite of non-composable morphisms at basis pair " + pair_str(t.i, t.j));
    if (raw.source[t.k] != raw.source[t.j] || raw.target[t.k] != raw.target[t.i])
      throw ValidationError("composition leaves the hom block at basis pair " + pair_str(t.i, t.j));
    left[t.i].add_to(t.k, t.j, t.coeff);
  }
  Matrix unit(f, n, 1);
  for (std::size_t id : raw.identities) unit.add_to(id, 0, Scalar::one(f));

  auto cat = std::shared_ptr<HModuleCategory>(new HModuleCategory());
  cat->hopf_ = hopf;
  cat->raw_ = raw;
  cat->algebra_ = Algebra::create(f, std::move(left), unit);
  const Algebra& alg = *cat->algebra_;

  for (std::size_t x = 0; x < objs; ++x) {
    Matrix id = Matrix::unit_vector(f, n, raw.identities[x]);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e = Matrix::unit_vector(f, n, j);
      Matrix want_left = raw.target[j] == x ? e : Matrix(f, n, 1);
      Matrix want_right = raw.source[j] == x ? e : Matrix(f, n, 1);
      if (!(alg.multiply(id, e) == want_left) || !(alg.multiply(e, id) == want_right))
        throw ValidationError("identity of object " + raw.objects[x] + " fails the unit law at basis index " +
                              std::to_string(j));
    }
  }

  if (raw.h_action.size() != hopf->dim())
    throw ValidationError("H-action needs one matrix per basis element of H");
  for (const auto& a : raw.h_action)
    if (a.rows() != n || a.cols() != n) throw ValidationError("H-action matrices must be square of size dim A");
  Representation rep(hopf->algebra(), n, raw.h_action);
  if (auto err = rep.check_axioms()) throw ValidationError("H-action on morphisms: " + *err);
  for (std::size_t t = 0; t < hopf->dim(); ++t) {
    const Matrix& a = raw.h_action[t];
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!a.at(k, j).is_zero() && (raw.source[k] != raw.source[j] || raw.target[k] != raw.target[j]))
          throw ValidationError("H-action does not preserve hom blocks at basis pair " + pair_str(t, j));
    for (std::size_t x = 0; x < objs; ++x) {
      Matrix id = Matrix::unit_vector(f, n, raw.identities[x]);
      if (!(a * id == id.scaled(hopf->counit(t))))
        throw ValidationError("H does not act on identities through the counit at basis index " +
                              std::to_string(t));
    }
  }
  for (std::size_t t = 0; t < hopf->dim(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (raw.source[i] != raw.target[j]) continue;
        Matrix ei = Matrix::unit_vector(f, n, i);
        Matrix ej = Matrix::unit_vector(f, n, j);
        Matrix lhs = raw.h_action[t] * alg.multiply(ei, ej);
        Matrix rhs(f, n, 1);
        for (const auto& s : hopf->comult(t))
          rhs.add_scaled(s.coeff, alg.multiply(raw.h_action[s.left] * ei, raw.h_action[s.right] * ej));
        if (!(lhs == rhs))
          throw ValidationError("H-action is not compatible with composition at basis " + std::to_string(t) +
                                " and morphism pair " + pair_str(i, j));
      }
    }
  }
  return cat;
}

Matrix HModuleCategory::act_on_morphisms(const Matrix& h_element) const {
  return combine(field(), dim(), raw_.h_action, h_element);
}

std::size_t HModuleCategory::hom_dim(std::size_t x, std::size_t y) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < dim(); ++i) count += raw_.source[i] == x && raw_.target[i] == y;
  return count;
}

namespace {

std::vector<Matrix> trivial_h_action(const HopfAlgebra& h, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t t = 0; t < h.dim(); ++t) out.push_back(Matrix::identity(h.field(), n).scaled(h.counit(t)));
  return out;
}

RawCategory truncpoly(const HopfPtr& hopf, std::size_t n, bool trivial) {
  const Field& f = hopf->field();
  RawCategory raw;
  raw.objects = {"*"};
  for (std::size_t i = 0; i < n; ++i) {
    raw.basis.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
    raw.source.push_back(0);
    raw.target.push_back(0);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) raw.compose.push_back({i, j, i + j, Scalar::one(f)});
  raw.identities = {0};
  raw.name = "truncpoly:" + std::to_string(n);
  const bool derivation = hopf->family() == "divided_power" && !trivial;
  if (!derivation) {
    raw.h_action = trivial_h_action(*hopf, n);
    if (trivial && hopf->family() == "divided_power") raw.name += ":trivial";
    return raw;
  }
  const auto p = static_cast<std::size_t>(hopf->params()[0]);
  if (n % p != 0)
    throw ValidationError("truncpoly:" + std::to_string(n) + " carries d/dx only when p divides n; use truncpoly:" +
                          std::to_string(n) + ":trivial");
  // d^i acts as the i-th derivative x^j -> j(j-1)...(j-i+1) x^(j-i).
  for (std::size_t i = 0; i < hopf->dim(); ++i) {
    Matrix a(f, n, n);
    for (std::size_t j = i; j < n; ++j) {
      std::uint64_t c = 1;
      for (std::size_t r = 0; r < i; ++r) c = c * ((j - r) % p) % p;
      a.set(j - i, j, Scalar(f, static_cast<std::int64_t>(c)));
    }
    raw.h_action.push_back(a);
  }
  return raw;
}

}  // namespace

CategoryPtr unit_category(const HopfPtr& hopf) {
  RawCategory raw;
  raw.objects = {"*"};
  raw.basis = {"id"};
  raw.source = {0};
  raw.target = {0};
  raw.compose = {{0, 0, 0, Scalar::one(hopf->field())}};
  raw.identities = {0};
  raw.h_action = trivial_h_action(*hopf, 1);
  raw.name = "k";
  return HModuleCategory::validate(hopf, raw);
}

CategoryPtr catalog_category(const HopfPtr& hopf, const std::string& spec) {
  if (spec == "k") return unit_category(hopf);
  if (spec == "a2quiver") {
    const Field& f = hopf->field();
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.basis = {"e_x", "e_y", "a"};
    raw.source = {0, 1, 0};
    raw.target = {0, 1, 1};
    raw.compose = {{0, 0, 0, Scalar::one(f)},
                   {1, 1, 1, Scalar::one(f)},
                   {2, 0, 2, Scalar::one(f)},
                   {1, 2, 2, Scalar::one(f)}};
    raw.identities = {0, 1};
    raw.h_action = trivial_h_action(*hopf, 3);
    raw.name = "a2quiver";
    return HModuleCategory::validate(hopf, raw);
  }
  const std::string prefix = "truncpoly:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string rest = spec.substr(prefix.size());
    bool trivial = false;
    if (auto pos = rest.find(':'); pos != std::string::npos) {
      if (rest.substr(pos + 1) != "trivial") throw ValidationError("unknown category: " + spec);
      trivial = true;
      rest = rest.substr(0, pos);
    }
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
    } catch (const std::exception&) {
      throw ValidationError("bad truncpoly degree in " + spec);
    }
    if (n < 1 || n > 64) throw ValidationError("truncpoly degree must be between 1 and 64");
    return HModuleCategory::validate(hopf, truncpoly(hopf, n, trivial));
  }
  throw ValidationError("unknown category: " + spec + " (expected k, truncpoly:n or a2quiver)");
}

SmashPtr SmashAlgebra::create(const CategoryPtr& cat) {
  const auto& h = *cat->hopf();
  const Field& f = cat->field();
  const std::size_t da = cat->dim();
  const std::size_t dh = h.dim();
  const Algebra& alg = *cat->algebra();
  std::vector<Matrix> left;
  left.reserve(da * dh);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t t = 0; t < dh; ++t) {
      Matrix l(f, da * dh, da * dh);
      for (std::size_t b = 0; b < da; ++b) {
        for (const auto& s : h.comult(t)) {
          Matrix w = alg.left_mult(a) * cat->h_action(s.left).col(b);
          if (w.is_zero()) continue;
          const Matrix& hl = h.algebra()->left_mult(s.right);
          for (std::size_t g = 0; g < dh; ++g)
            l.set_block(0, b * dh + g, l.block(0, b * dh + g, da * dh, 1) + kronecker(w, hl.col(g)).scaled(s.coeff));
        }
      }
      left.push_back(std::move(l));
    }
  }
  auto out = std::shared_ptr<SmashAlgebra>(new SmashAlgebra());
  out->base_ = cat;
  out->algebra_ = Algebra::create(f, std::move(left), kronecker(alg.unit(), h.unit()));
  return out;
}

Matrix SmashAlgebra::from_category(const Matrix& a) const { return kronecker(a, hopf()->unit()); }
Matrix SmashAlgebra::from_hopf(const Matrix& h) const { return kronecker(base_->algebra()->unit(), h); }

SmashPtr unit_smash(const HopfPtr& hopf) {
  static std::mutex mu;
  static std::map<const HopfAlgebra*, SmashPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(hopf.get());
  if (it != cache.end()) return it->second;
  SmashPtr s = SmashAlgebra::create(unit_category(hopf));
  cache.emplace(hopf.get(), s);
  return s;
}

EquivariantModule::EquivariantModule(SmashPtr smash, Representation rep)
    : smash_(std::move(smash)), rep_(std::move(rep)) {}

Matrix EquivariantModule::a_action(std::size_t i) const {
  return rep_.act(smash_->from_category(Matrix::unit_vector(field(), category()->dim(), i)));
}

Matrix EquivariantModule::h_action(std::size_t i) const {
  return rep_.act(smash_->from_hopf(Matrix::unit_vector(field(), hopf()->dim(), i)));
}

std::vector<Matrix> EquivariantModule::a_actions() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < category()->dim(); ++i) out.push_back(a_action(i));
  return out;
}

std::vector<Matrix> EquivariantModule::h_actions() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < hopf()->dim(); ++i) out.push_back(h_action(i));
  return out;
}

std::vector<std::size_t> EquivariantModule::object_grading() const {
  std::vector<std::size_t> out;
  for (std::size_t id : category()->raw().identities) out.push_back(rank(a_action(id)));
  return out;
}

HModule EquivariantModule::as_hmodule() const {
  return HModule(hopf(), Representation(hopf()->algebra(), dim(), h_actions()));
}

Representation EquivariantModule::forget() const {
  return Representation(category()->algebra(), dim(), a_actions());
}

EquivariantModule make_equivariant(const SmashPtr& smash, std::vector<Matrix> a_action,
                                   std::vector<Matrix> h_action) {
  const auto& cat = *smash->base();
  const auto& h = *smash->hopf();
  const Field& f = smash->field();
  if (a_action.size() != cat.dim())
    throw ValidationError("A-action needs " + std::to_string(cat.dim()) + " matrices");
  if (h_action.size() != h.dim()) throw ValidationError("H-action needs " + std::to_string(h.dim()) + " matrices");
  const std::size_t dim = a_action.empty() ? 0 : a_action[0].rows();
  for (const auto& m : a_action)
    if (m.rows() != dim || m.cols() != dim) throw ValidationError("A-action matrices must be square of one size");
  for (const auto& m : h_action)
    if (m.rows() != dim || m.cols() != dim) throw ValidationError("H-action matrices must match the A-action size");
  Representation ra(cat.algebra(), dim, a_action);
  if (auto err = ra.check_axioms()) throw ValidationError("A-action: " + *err);
  Representation rh(h.algebra(), dim, h_action);
  if (auto err = rh.check_axioms()) throw ValidationError("H-action: " + *err);
  for (std::size_t t = 0; t < h.dim(); ++t) {
    for (std::size_t i = 0; i < cat.dim(); ++i) {
      Matrix e = Matrix::unit_vector(f, cat.dim(), i);
      Matrix rhs(f, dim, dim);
      for (const auto& s : h.comult(t)) rhs.add_scaled(s.coeff, ra.act(cat.h_action(s.left) * e) * h_action[s.right]);
      if (!(h_action[t] * a_action[i] == rhs))
        throw ValidationError("H- and A-actions are not compatible at basis pair " + pair_str(t, i));
    }
  }
  return assemble(smash, dim, a_action, h_action);
}

EquivariantModule from_smash_module(const SmashPtr& smash, std::vector<Matrix> action) {
  const std::size_t dim = action.empty() ? 0 : action[0].rows();
  return EquivariantModule(smash, validated_representation(smash->algebra(), dim, std::move(action)));
}

EquivariantModule from_hmodule(const HModule& m) {
  SmashPtr s = unit_smash(m.hopf());
  return EquivariantModule(s, Representation(s->algebra(), m.dim(), m.actions()));
}

EquivariantModule zero_equivariant(const SmashPtr& smash) {
  return EquivariantModule(smash, zero_representation(smash->algebra()));
}

EquivariantModule direct_sum(const EquivariantModule& m, const EquivariantModule& n) {
  same_smash(m, n, "direct_sum");
  return EquivariantModule(m.smash(), direct_sum(m.rep(), n.rep()));
}

EquivariantModule direct_sum(const std::vector<EquivariantModule>& ms) {
  if (ms.empty()) throw DimensionError("direct sum of an empty list");
  EquivariantModule out = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) out = direct_sum(out, ms[i]);
  return out;
}

EquivariantModule free_equivariant(const SmashPtr& smash, std::size_t rank) {
  return EquivariantModule(smash, free_representation(smash->algebra(), rank));
}

EquivariantModule category_module(const SmashPtr& smash) {
  const auto& cat = *smash->base();
  std::vector<Matrix> a_action;
  for (std::size_t i = 0; i < cat.dim(); ++i) a_action.push_back(cat.algebra()->left_mult(i));
  return assemble(smash, cat.dim(), a_action, cat.raw().h_action);
}

bool is_equivariant_map(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n) {
  same_smash(m, n, "is_equivariant_map");
  return is_intertwiner(f, m.rep(), n.rep());
}

Subspace equivariant_homs(const EquivariantModule& m, const EquivariantModule& n) {
  same_smash(m, n, "equivariant_homs");
  return intertwiners(m.rep(), n.rep());
}

EquivariantModule tensor_with_hmodule(const EquivariantModule& m, const HModule& v) {
  if (m.hopf() != v.hopf()) throw DimensionError("tensor_with_hmodule: different Hopf algebras");
  const std::size_t dim = m.dim() * v.dim();
  Matrix iv = Matrix::identity(m.field(), v.dim());
  std::vector<Matrix> a_action;
  for (const auto& a : m.a_actions()) a_action.push_back(kronecker(a, iv));
  std::vector<Matrix> mh = m.h_actions();
  std::vector<Matrix> h_action;
  for (std::size_t t = 0; t < m.hopf()->dim(); ++t) {
    Matrix a(m.field(), dim, dim);
    for (const auto& s : m.hopf()->comult(t)) a.add_scaled(s.coeff, kronecker(mh[s.left], v.action(s.right)));
    h_action.push_back(std::move(a));
  }
  return assemble(m.smash(), dim, a_action, h_action);
}

EquivariantModule cone(const EquivariantModule& m) { return tensor_with_hmodule(m, regular_module(m.hopf())); }
EquivariantModule suspend(const EquivariantModule& m) {
  return tensor_with_hmodule(m, quotient_by_integral(m.hopf()).module);
}
EquivariantModule desuspend(const EquivariantModule& m) {
  return tensor_with_hmodule(m, counit_kernel_module(m.hopf()).module);
}

EquivariantModule suspend_n(const EquivariantModule& m, int n) {
  if (n == 0) return m;
  HModule factor = n > 0 ? quotient_by_integral(m.hopf()).module : counit_kernel_module(m.hopf()).module;
  EquivariantModule out = m;
  for (int i = 0; i < std::abs(n); ++i) out = tensor_with_hmodule(out, factor);
  return out;
}

Matrix cone_inclusion(const EquivariantModule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim()), m.hopf()->left_integral());
}

Matrix cone_projection(const EquivariantModule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim()), quotient_by_integral(m.hopf()).proj);
}

Matrix cone_counit(const EquivariantModule& m) {
  return kronecker(Matrix::identity(m.field(), m.dim()), counit_row(*m.hopf()));
}

Matrix HomSpace::map(const Matrix& coords) const {
  return Matrix::unvectorize(maps.basis_columns() * coords, rows, cols);
}

Matrix HomSpace::coordinates(const Matrix& f) const {
  Matrix v = f.vectorize();
  if (!maps.contains(v)) throw ValidationError("map is not A-linear");
  return maps.coordinates(v);
}

HomSpace hom_space(const EquivariantModule& m, const EquivariantModule& n) {
  same_smash(m, n, "hom_space");
  const auto& h = *m.hopf();
  const Field& f = m.field();
  Subspace maps = intertwiners(m.forget(), n.forget());
  const std::size_t d = maps.dim();
  std::vector<Matrix> mh = m.h_actions();
  std::vector<Matrix> nh = n.h_actions();
  std::vector<Matrix> sinv_t;
  for (std::size_t l = 0; l < h.dim(); ++l)
    sinv_t.push_back(combine(f, m.dim(), mh, h.antipode_inverse().col(l)).transpose());
  Matrix basis = maps.basis_columns();
  std::vector<Matrix> action;
  for (std::size_t t = 0; t < h.dim(); ++t) {
    Matrix image(f, m.dim() * n.dim(), d);
    for (const auto& s : h.comult(t)) image.add_scaled(s.coeff, kronecker(nh[s.right], sinv_t[s.left]) * basis);
    action.push_back(d == 0 ? Matrix(f, 0, 0) : maps.coordinates_of_columns(image));
  }
  HModule module(m.hopf(), Representation(h.algebra(), d, std::move(action)));
  HomologyData hd = homology(module);
  return HomSpace{std::move(maps), std::move(module), std::move(hd), n.dim(), m.dim()};
}

EquivariantModule cone_adjoint_C(const SmashPtr& smash, const Representation& n) {
  const auto& cat = *smash->base();
  const auto& h = *smash->hopf();
  const Field& f = smash->field();
  if (n.algebra() != cat.algebra()) throw DimensionError("cone_adjoint_C: module over a different algebra");
  const std::size_t dh = h.dim();
  const std::size_t dim = n.dim() * dh;
  std::vector<Matrix> a_action;
  for (std::size_t i = 0; i < cat.dim(); ++i) {
    Matrix twisted = twisted_morphisms(cat, i);
    Matrix a(f, dim, dim);
    for (std::size_t j = 0; j < dh; ++j) {
      for (const auto& s : h.comult(j)) {
        Matrix e(f, dh, dh);
        e.set(s.right, j, 1);
        a.add_scaled(s.coeff, kronecker(n.act(twisted.col(s.left)), e));
      }
    }
    a_action.push_back(std::move(a));
  }
  std::vector<Matrix> h_action;
  Matrix in = Matrix::identity(f, n.dim());
  for (std::size_t g = 0; g < dh; ++g) h_action.push_back(kronecker(in, h.algebra()->left_mult(g)));
  return checked(assemble(smash, dim, a_action, h_action), "cone_adjoint_C");
}

EquivariantModule E_functor(const SmashPtr& smash, const Representation& n) {
  const auto& cat = *smash->base();
  const auto& h = *smash->hopf();
  const Field& f = smash->field();
  if (n.algebra() != cat.algebra()) throw DimensionError("E_functor: module over a different algebra");
  const std::size_t dh = h.dim();
  const std::size_t dn = n.dim();
  const std::size_t dim = dn * dh;
  std::vector<Matrix> a_action;
  for (std::size_t i = 0; i < cat.dim(); ++i) {
    Matrix twisted = twisted_morphisms(cat, i);
    Matrix a(f, dim, dim);
    for (std::size_t j = 0; j < dh; ++j)
      for (const auto& s : h.comult(j))
        a.set_block(j * dn, s.left * dn,
                    a.block(j * dn, s.left * dn, dn, dn) + n.act(twisted.col(s.right)).scaled(s.coeff));
    a_action.push_back(std::move(a));
  }
  std::vector<Matrix> h_action;
  Matrix in = Matrix::identity(f, dn);
  for (std::size_t g = 0; g < dh; ++g) {
    Matrix ls = h.algebra()->left_mult_of(h.antipode().col(g));
    h_action.push_back(kronecker(ls.transpose(), in));
  }
  return checked(assemble(smash, dim, a_action, h_action), "E_functor");
}

Matrix adjunction_phi(const EquivariantModule& m, const Representation& n, const Matrix& f) {
  const auto& h = *m.hopf();
  if (f.rows() != n.dim() || f.cols() != m.dim()) throw DimensionError("adjunction_phi: map has the wrong shape");
  std::vector<Matrix> mh = m.h_actions();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < h.dim(); ++j)
    blocks.push_back(f * combine(m.field(), m.dim(), mh, h.antipode_inverse().col(j)));
  return vstack(blocks);
}

Matrix adjunction_psi(const EquivariantModule& m, const Representation& n, const Matrix& g) {
  const auto& h = *m.hopf();
  const std::size_t dn = n.dim();
  if (g.rows() != dn * h.dim() || g.cols() != m.dim()) throw DimensionError("adjunction_psi: map has the wrong shape");
  Matrix out(m.field(), dn, m.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Scalar c = h.unit().at(j, 0);
    if (!c.is_zero()) out.add_scaled(c, g.block(j * dn, 0, dn, m.dim()));
  }
  return out;
}

Matrix cone_adjunction_unit(const SmashPtr& smash, const Representation& n) {
  return kronecker(Matrix::identity(smash->field(), n.dim()), smash->hopf()->unit());
}

Matrix cone_adjunction_counit(const EquivariantModule& m) {
  const std::size_t dh = m.hopf()->dim();
  Matrix out(m.field(), m.dim(), m.dim() * dh);
  for (std::size_t j = 0; j < dh; ++j) {
    Matrix a = m.h_action(j);
    for (std::size_t v = 0; v < m.dim(); ++v) out.set_block(0, v * dh + j, a.col(v));
  }
  return out;
}

}  // namespace hopfo
