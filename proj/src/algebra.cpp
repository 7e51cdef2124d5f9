#include "hopfo/algebra.hpp"

#include <random>

namespace hopfo {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Left multiplication closure of `start` under the given matrices.
Subspace closure_under(const std::vector<Matrix>& ops, Subspace start) {
  while (true) {
    std::vector<Matrix> blocks{start.basis()};
    Matrix cols = start.basis_columns();
    if (start.dim() == 0) return start;
    for (const auto& op : ops) blocks.push_back((op * cols).transpose());
    Subspace next = Subspace::from_rows(vstack(blocks));
    if (next.dim() == start.dim()) return next;
    start = std::move(next);
  }
}

}  // namespace

AlgebraPtr Algebra::create(const Field& field, std::vector<Matrix> left_mult, Matrix unit) {
  const std::size_t n = left_mult.size();
  if (unit.rows() != n || unit.cols() != 1) throw ValidationError("algebra unit has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (left_mult[i].rows() != n || left_mult[i].cols() != n || !(left_mult[i].field() == field)) {
      throw ValidationError("left multiplication matrix " + std::to_string(i) + " has wrong shape");
    }
  }
  auto alg = std::shared_ptr<Algebra>(new Algebra(field, std::move(left_mult), std::move(unit)));
  if (!alg->left_mult_of(alg->unit_).is_identity()) {
    throw ValidationError("unit axiom violated: 1*b != b");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(alg->left_mult_[i] * alg->unit_ == alg->basis_vector(i))) {
      throw ValidationError("unit axiom violated: b_" + std::to_string(i) + "*1 != b_" +
                            std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = alg->left_mult_[i] * alg->left_mult_[j];
      Matrix rhs = alg->left_mult_of(alg->left_mult_[i].col(j));
      if (!(lhs == rhs)) {
        throw ValidationError("associativity violated at basis pair " + pair_text(i, j));
      }
    }
  }
  alg->compute_generators();
  return alg;
}

Matrix Algebra::left_mult_of(const Matrix& element) const {
  Matrix r(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) r.add_scaled(element.at(i, 0), left_mult_[i]);
  return r;
}

void Algebra::compute_generators() {
  std::vector<Matrix> ops;
  Subspace reached = closure_under(ops, Subspace::from_columns(unit_));
  for (std::size_t i = 0; i < dim() && reached.dim() < dim(); ++i) {
    Matrix b = basis_vector(i);
    if (reached.contains(b)) continue;
    generators_.push_back(b);
    ops.push_back(left_mult_[i]);
    reached = closure_under(ops, reached.sum(Subspace::from_columns(b)));
  }
}

// ---------------------------------------------------------------------------

Representation::Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != algebra_->dim()) {
    throw DimensionError("representation needs " + std::to_string(algebra_->dim()) +
                         " action matrices, got " + std::to_string(action_.size()));
  }
  for (const auto& a : action_) {
    if (a.rows() != dim_ || a.cols() != dim_ || !(a.field() == algebra_->field())) {
      throw DimensionError("action matrix has wrong shape or field");
    }
  }
  for (const auto& g : algebra_->generators()) generator_action_.push_back(act(g));
}

Matrix Representation::act(const Matrix& element) const {
  Matrix r(field(), dim_, dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) r.add_scaled(element.at(i, 0), action_[i]);
  return r;
}

std::optional<std::string> Representation::check_axioms() const {
  if (!act(algebra_->unit()).is_identity()) return "unit acts by a non-identity matrix";
  const std::size_t n = algebra_->dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(action_[i] * action_[j] == act(algebra_->left_mult(i).col(j)))) {
        return "action is not multiplicative at basis pair " + pair_text(i, j);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> Representation::check_axioms_fast() const {
  if (!act(algebra_->unit()).is_identity()) return "unit acts by a non-identity matrix";
  const auto& gens = algebra_->generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix lg = algebra_->left_mult_of(gens[g]);
    for (std::size_t j = 0; j < algebra_->dim(); ++j) {
      if (!(generator_action_[g] * action_[j] == act(lg.col(j)))) {
        return "action is not multiplicative at generator " + std::to_string(g) + ", basis " +
               std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

Representation validated_representation(AlgebraPtr algebra, std::size_t dim,
                                        std::vector<Matrix> action) {
  Representation r(std::move(algebra), dim, std::move(action));
  if (auto err = r.check_axioms()) throw ValidationError(*err);
  return r;
}

Representation regular_representation(const AlgebraPtr& algebra) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) action.push_back(algebra->left_mult(i));
  return Representation(algebra, algebra->dim(), std::move(action));
}

Representation free_representation(const AlgebraPtr& algebra, std::size_t rank) {
  const auto& f = algebra->field();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) {
    action.push_back(kronecker(Matrix::identity(f, rank), algebra->left_mult(i)));
  }
  return Representation(algebra, rank * algebra->dim(), std::move(action));
}

Representation zero_representation(const AlgebraPtr& algebra) {
  std::vector<Matrix> action(algebra->dim(), Matrix(algebra->field(), 0, 0));
  return Representation(algebra, 0, std::move(action));
}

Representation direct_sum(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) throw DimensionError("direct_sum: modules over different algebras");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < m.actions().size(); ++i) {
    action.push_back(block_diagonal({m.action(i), n.action(i)}));
  }
  return Representation(m.algebra(), m.dim() + n.dim(), std::move(action));
}

bool is_intertwiner(const Matrix& f, const Representation& m, const Representation& n) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::size_t g = 0; g < m.generator_actions().size(); ++g) {
    if (!(f * m.generator_actions()[g] == n.generator_actions()[g] * f)) return false;
  }
  return true;
}

bool is_invariant_subspace(const Subspace& s, const Representation& m) {
  Matrix cols = s.basis_columns();
  for (const auto& g : m.generator_actions()) {
    if (!s.contains(Subspace::from_columns(g * cols))) return false;
  }
  return true;
}

SubmoduleData submodule(const Representation& m, const Subspace& s) {
  if (!is_invariant_subspace(s, m)) throw ValidationError("subspace is not a submodule");
  Matrix incl = s.basis_columns();
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(s.coordinates_of_columns(a * incl));
  return {Representation(m.algebra(), s.dim(), std::move(action)), std::move(incl)};
}

QuotientData quotient_module(const Representation& m, const Subspace& s) {
  if (!is_invariant_subspace(s, m)) throw ValidationError("quotient by a non-submodule");
  auto q = quotient_map(m.dim(), s);
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(q.proj * a * q.section);
  const std::size_t d = q.proj.rows();
  return {Representation(m.algebra(), d, std::move(action)), std::move(q.proj),
          std::move(q.section)};
}

Subspace generated_submodule(const Representation& m, const Matrix& vectors) {
  if (vectors.cols() == 0) return Subspace(m.field(), m.dim());
  std::vector<Matrix> blocks;
  for (const auto& a : m.actions()) blocks.push_back(a * vectors);
  return Subspace::from_columns(hstack(blocks));
}

std::vector<Matrix> module_generators(const Representation& m) {
  std::vector<Matrix> gens;
  Subspace reached(m.field(), m.dim());
  for (std::size_t c = 0; c < m.dim() && reached.dim() < m.dim(); ++c) {
    Matrix e = Matrix::unit_vector(m.field(), m.dim(), c);
    if (reached.contains(e)) continue;
    gens.push_back(e);
    reached = reached.sum(generated_submodule(m, e));
  }
  return gens;
}

Matrix right_composition_operator(const Matrix& b, std::size_t rows) {
  return kronecker(Matrix::identity(b.field(), rows), b.transpose());
}

Matrix left_composition_operator(const Matrix& a, std::size_t cols) {
  return kronecker(a, Matrix::identity(a.field(), cols));
}

namespace {

// Module maps m -> n are determined by the images w_t of generators v_t of m.
// With a basis m_s = b_{i_s} v_{t_s} of m, the map sends m_s to b_{i_s} w_{t_s};
// requiring this to commute with every algebra generator is a linear system in
// the stacked unknown W (index t * dim n + row).
struct SpinSystem {
  std::vector<Matrix> gens;            // generators of m
  std::vector<std::size_t> basis_alg;  // i_s
  std::vector<std::size_t> basis_gen;  // t_s
  Matrix basis_inv;                    // inverse of [m_s] columns
  Matrix constraints;                  // rows of the homogeneous system on vec W
};

SpinSystem spin_system(const Representation& m, const Representation& n) {
  const auto& f = m.field();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const std::size_t da = m.algebra()->dim();
  SpinSystem sys{module_generators(m), {}, {}, Matrix(f, 0, 0), Matrix(f, 0, 0)};
  const std::size_t d = sys.gens.size();

  Matrix candidates(f, dm, d * da);
  for (std::size_t t = 0; t < d; ++t) {
    for (std::size_t i = 0; i < da; ++i) candidates.set_block(0, t * da + i, m.action(i) * sys.gens[t]);
  }
  auto piv = rref(candidates).pivots;
  if (piv.size() != dm) throw InternalError("module generators do not span the module");
  for (auto c : piv) {
    sys.basis_gen.push_back(c / da);
    sys.basis_alg.push_back(c % da);
  }
  auto binv = inverse(candidates.select_cols(piv));
  if (!binv) throw InternalError("spanning basis is singular");
  sys.basis_inv = *binv;
  Matrix basis = candidates.select_cols(piv);

  const auto& gm = m.generator_actions();
  const auto& gn = n.generator_actions();
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < gm.size(); ++g) {
    Matrix coeff = sys.basis_inv * gm[g] * basis;
    Matrix rows(f, dm * dn, d * dn);
    for (std::size_t s = 0; s < dm; ++s) {
      for (std::size_t s2 = 0; s2 < dm; ++s2) {
        Scalar c = coeff.at(s2, s);
        if (c.is_zero()) continue;
        Matrix blk = rows.block(s * dn, sys.basis_gen[s2] * dn, dn, dn);
        blk.add_scaled(c, n.action(sys.basis_alg[s2]));
        rows.set_block(s * dn, sys.basis_gen[s2] * dn, blk);
      }
      Matrix blk = rows.block(s * dn, sys.basis_gen[s] * dn, dn, dn);
      blk -= gn[g] * n.action(sys.basis_alg[s]);
      rows.set_block(s * dn, sys.basis_gen[s] * dn, blk);
    }
    blocks.push_back(std::move(rows));
  }
  sys.constraints = blocks.empty() ? Matrix(f, 0, d * dn) : vstack(blocks);
  return sys;
}

// The map m -> n determined by generator images W (dn x d).
Matrix map_from_generator_images(const SpinSystem& sys, const Representation& n, const Matrix& w) {
  const std::size_t dm = sys.basis_alg.size();
  Matrix on_basis(n.field(), n.dim(), dm);
  for (std::size_t s = 0; s < dm; ++s) {
    on_basis.set_block(0, s, n.action(sys.basis_alg[s]) * w.col(sys.basis_gen[s]));
  }
  return on_basis * sys.basis_inv;
}

// vec W (index t * dn + row) -> dn x d matrix
Matrix images_from_vec(const Matrix& v, std::size_t dn, std::size_t d) {
  return Matrix::unvectorize(v, d, dn).transpose();
}

}  // namespace

Subspace intertwiners(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) throw DimensionError("intertwiners: different algebras");
  const auto& f = m.field();
  if (m.dim() == 0 || n.dim() == 0) return Subspace(f, m.dim() * n.dim());
  SpinSystem sys = spin_system(m, n);
  const std::size_t d = sys.gens.size();
  Subspace sol = sys.constraints.rows() == 0 ? Subspace::full(f, d * n.dim())
                                             : kernel(sys.constraints);
  if (sol.dim() == 0) return Subspace(f, m.dim() * n.dim());
  Matrix rows(f, sol.dim(), m.dim() * n.dim());
  for (std::size_t k = 0; k < sol.dim(); ++k) {
    Matrix w = images_from_vec(sol.basis_vector(k), n.dim(), d);
    rows.set_block(k, 0, map_from_generator_images(sys, n, w).vectorize().transpose());
  }
  return Subspace::from_rows(rows);
}

Matrix hom_basis_matrix(const Subspace& homs, std::size_t i, std::size_t rows, std::size_t cols) {
  return Matrix::unvectorize(homs.basis_vector(i), rows, cols);
}

FreeCover free_cover(const Representation& m) {
  auto gens = module_generators(m);
  const auto& alg = m.algebra();
  Representation free = free_representation(alg, gens.size());
  Matrix proj(m.field(), m.dim(), free.dim());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      proj.set_block(0, t * alg->dim() + i, m.action(i) * gens[t]);
    }
  }
  return {std::move(free), std::move(proj), std::move(gens)};
}

std::optional<Matrix> projective_section(const Representation& m) {
  const auto& f = m.field();
  if (m.dim() == 0) return Matrix(f, 0, 0);
  FreeCover cover = free_cover(m);
  // Section s: m -> F determined by images w_t of the generators of m.
  // Require s to be a module map and proj * w_t = v_t for the generators v_t
  // of m used by the spin system.
  SpinSystem sys = spin_system(m, cover.free);
  const std::size_t d = sys.gens.size();
  const std::size_t df = cover.free.dim();
  Matrix cond(f, d * m.dim(), d * df);
  Matrix rhs(f, d * m.dim(), 1);
  for (std::size_t t = 0; t < d; ++t) {
    cond.set_block(t * m.dim(), t * df, cover.projection);
    rhs.set_block(t * m.dim(), 0, sys.gens[t]);
  }
  Matrix lhs = sys.constraints.rows() == 0 ? cond : vstack({sys.constraints, cond});
  Matrix full_rhs = sys.constraints.rows() == 0
                        ? rhs
                        : vstack({Matrix(f, sys.constraints.rows(), 1), rhs});
  auto x = solve(lhs, full_rhs);
  if (!x) return std::nullopt;
  Matrix s = map_from_generator_images(sys, cover.free, images_from_vec(*x, df, d));
  if (!(cover.projection * s).is_identity() || !is_intertwiner(s, m, cover.free)) {
    throw InternalError("projective section failed verification");
  }
  return s;
}

std::optional<Matrix> solve_intertwiner(const Representation& src, const Representation& dst,
                                        const Matrix& lhs, const Matrix& rhs) {
  const auto& f = src.field();
  Subspace homs = intertwiners(src, dst);
  if (homs.dim() == 0) {
    if (rhs.is_zero()) return Matrix(f, dst.dim(), src.dim());
    return std::nullopt;
  }
  auto c = solve(lhs * homs.basis_columns(), rhs);
  if (!c) return std::nullopt;
  return Matrix::unvectorize(homs.basis_columns() * *c, dst.dim(), src.dim());
}

std::optional<Matrix> free_basis_iso(const Representation& m) {
  const auto& alg = m.algebra();
  const std::size_t da = alg->dim();
  if (m.dim() % da != 0) return std::nullopt;
  const std::size_t r = m.dim() / da;
  const auto& f = m.field();
  if (r == 0) return Matrix(f, 0, 0);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  const std::size_t budget = m.dim() + 64 * r;
  std::vector<Matrix> chosen;
  Subspace reached(f, m.dim());
  for (std::size_t attempt = 0; attempt < budget && chosen.size() < r; ++attempt) {
    Matrix v(f, m.dim(), 1);
    if (attempt < m.dim()) {
      v.set(attempt, 0, 1);
    } else {
      const auto p = f.is_prime() ? f.characteristic() : 7;
      for (std::size_t i = 0; i < m.dim(); ++i) {
        v.set(i, 0, static_cast<std::int64_t>(rng() % p));
      }
    }
    Subspace grown = reached.sum(generated_submodule(m, v));
    if (grown.dim() == (chosen.size() + 1) * da) {
      chosen.push_back(v);
      reached = std::move(grown);
    }
  }
  if (chosen.size() < r) return std::nullopt;
  Matrix iso(f, m.dim(), m.dim());
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t i = 0; i < da; ++i) iso.set_block(0, t * da + i, m.action(i) * chosen[t]);
  }
  return iso;
}

std::optional<std::pair<Matrix, Matrix>> find_module_isomorphism(const Representation& m, const Representation& n) {
  if (m.algebra() != n.algebra()) throw DimensionError("find_module_isomorphism: different algebras");
  const auto& f = m.field();
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return std::make_pair(Matrix(f, 0, 0), Matrix(f, 0, 0));
  Subspace homs = intertwiners(m, n);
  if (homs.dim() == 0) return std::nullopt;
  Matrix basis = homs.basis_columns();
  std::mt19937_64 rng(0x5eed);
  const std::uint64_t p = f.is_prime() ? f.characteristic() : 11;
  for (std::size_t attempt = 0; attempt < homs.dim() + 64; ++attempt) {
    Matrix c(f, homs.dim(), 1);
    if (attempt < homs.dim()) {
      c.set(attempt, 0, 1);
    } else {
      for (std::size_t i = 0; i < homs.dim(); ++i) c.set(i, 0, static_cast<std::int64_t>(rng() % p));
    }
    Matrix iso = Matrix::unvectorize(basis * c, n.dim(), m.dim());
    if (auto inv = inverse(iso)) return std::make_pair(iso, *inv);
  }
  return std::nullopt;
}

}  // namespace hopfo
