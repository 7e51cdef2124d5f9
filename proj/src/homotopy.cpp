#include "hopfo/homotopy.hpp"

namespace hopfo {

namespace {

// Column span inside k^ambient, allowing an empty generator matrix.
Subspace span_columns(const Field& f, std::size_t ambient, const Matrix& columns) {
  if (columns.cols() == 0 || ambient == 0) return Subspace(f, ambient);
  return Subspace::from_columns(columns);
}

void check_map(const Matrix& f, std::size_t rows, std::size_t cols, const char* what) {
  if (f.rows() != rows || f.cols() != cols)
    throw DimensionError(std::string(what) + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix");
}

std::optional<Matrix> retraction_of(const Matrix& i, const Representation& src, const Representation& dst) {
  // r: src -> dst with r i = id_dst.
  return solve_intertwiner(src, dst, right_composition_operator(i, dst.dim()),
                           Matrix::identity(dst.field(), dst.dim()).vectorize());
}

std::size_t suspension_factor_dim(const HopfAlgebra& h, int n) {
  // H/(lambda) and Ker epsilon both have dimension dim H - 1.
  std::size_t d = 1;
  for (int i = 0; i < std::abs(n); ++i) d *= h.dim() - 1;
  return d;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace

ExtensionData make_extension(EquivariantModule l, EquivariantModule m, EquivariantModule n, Matrix i, Matrix p) {
  check_map(i, m.dim(), l.dim(), "make_extension (i)");
  check_map(p, n.dim(), m.dim(), "make_extension (p)");
  if (!is_equivariant_map(i, l, m)) throw ValidationError("make_extension: i is not equivariant");
  if (!is_equivariant_map(p, m, n)) throw ValidationError("make_extension: p is not equivariant");
  if (!(p * i).is_zero()) throw ValidationError("make_extension: p o i is not zero");
  ExtensionData e{std::move(l), std::move(m), std::move(n), std::move(i), std::move(p), false, std::nullopt,
                  std::nullopt};
  e.is_exact = rank(e.i) == e.l.dim() && rank(e.p) == e.n.dim() && e.m.dim() == e.l.dim() + e.n.dim();
  if (e.is_exact) {
    e.a_retraction = retraction_of(e.i, e.m.forget(), e.l.forget());
    e.retraction = retraction_of(e.i, e.m.rep(), e.l.rep());
  }
  return e;
}

std::optional<Matrix> is_A_split(const ExtensionData& e) { return retraction_of(e.i, e.m.forget(), e.l.forget()); }

std::optional<Matrix> is_homotopic(const Matrix& f, const Matrix& g, const EquivariantModule& m,
                                   const EquivariantModule& n) {
  check_map(f, n.dim(), m.dim(), "is_homotopic");
  check_map(g, n.dim(), m.dim(), "is_homotopic");
  EquivariantModule c = cone(m);
  return solve_intertwiner(c.rep(), n.rep(), right_composition_operator(cone_inclusion(m), n.dim()),
                           (f - g).vectorize());
}

StableHomData stable_hom(const EquivariantModule& m, const EquivariantModule& n) {
  const Field& f = m.field();
  const std::size_t ambient = m.dim() * n.dim();
  Subspace z = equivariant_homs(m, n);
  Subspace through_cone = equivariant_homs(cone(m), n);
  Matrix restrict = right_composition_operator(cone_inclusion(m), n.dim());
  Subspace w = span_columns(f, ambient, restrict * through_cone.basis_columns());

  HomSpace hs = hom_space(m, n);
  Subspace b = span_columns(f, ambient, hs.maps.basis_columns() * hs.homology.boundaries.basis_columns());
  if (!(w == b) || !z.contains(w) || z.dim() - w.dim() != hs.homology.dim)
    throw InternalError("stable hom by homotopy quotient (" + std::to_string(z.dim() - w.dim()) +
                        ") disagrees with H(hom_space) (" + std::to_string(hs.homology.dim) + ")");

  StableHomData out;
  out.dim = z.dim() - w.dim();
  out.homology_dim = hs.homology.dim;
  out.equivariant_dim = z.dim();
  out.null_homotopic_dim = w.dim();
  if (out.dim > 0) {
    Matrix wz = z.coordinates_of_columns(w.basis_columns());
    Subspace w_in_z = span_columns(f, z.dim(), wz);
    auto q = quotient_map(z.dim(), w_in_z);
    Matrix reps = z.basis_columns() * q.section;
    for (std::size_t c = 0; c < reps.cols(); ++c)
      out.representatives.push_back(Matrix::unvectorize(reps.col(c), n.dim(), m.dim()));
  }
  return out;
}

TriangleData mapping_cone(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n) {
  check_map(f, n.dim(), m.dim(), "mapping_cone");
  if (!is_equivariant_map(f, m, n)) throw ValidationError("mapping_cone: map is not equivariant");
  const Field& fld = m.field();
  EquivariantModule c = cone(m);
  Matrix incl = cone_inclusion(m);
  Representation sum = direct_sum(n.rep(), c.rep());
  Subspace rel = span_columns(fld, sum.dim(), vstack({f, -incl}));
  QuotientData q = quotient_module(sum, rel);
  EquivariantModule cf(m.smash(), q.module);
  Matrix j = q.proj * vstack({Matrix::identity(fld, n.dim()), Matrix(fld, c.dim(), n.dim())});
  Matrix k = q.proj * vstack({Matrix(fld, n.dim(), c.dim()), Matrix::identity(fld, c.dim())});
  Matrix pm = cone_projection(m);
  Matrix delta = hstack({Matrix(fld, pm.rows(), n.dim()), pm}) * q.section;
  EquivariantModule sm = suspend(m);
  bool exact = rank(j) == n.dim() && rank(delta) == sm.dim() && (delta * j).is_zero() &&
               cf.dim() == n.dim() + sm.dim();
  if (!exact) throw InternalError("standard triangle row 0 -> N -> C_f -> Sigma M -> 0 is not exact");
  if (!is_equivariant_map(j, n, cf) || !is_equivariant_map(delta, cf, sm))
    throw InternalError("standard triangle maps are not equivariant");
  return TriangleData{m, n, f, std::move(cf), std::move(j), std::move(k), std::move(delta), std::move(sm),
                      std::move(q.section)};
}

ConeSplittingVerdict null_homotopy_iff_cone_splits(const Matrix& f, const EquivariantModule& m,
                                                   const EquivariantModule& n) {
  ConeSplittingVerdict v;
  v.homotopy = is_homotopic(f, Matrix(f.field(), n.dim(), m.dim()), m, n);
  TriangleData t = mapping_cone(f, m, n);
  v.cone_retraction = retraction_of(t.j, t.cone.rep(), n.rep());
  return v;
}

Matrix suspend_map(const Matrix& f, const HopfPtr& hopf, int n) {
  if (n == 0) return f;
  return kronecker(f, Matrix::identity(f.field(), suspension_factor_dim(*hopf, n)));
}

Matrix stable_suspend_map(const Matrix& f, const HopfPtr& hopf, int n) {
  if (n == 0) return f;
  return kronecker(f, Matrix::identity(f.field(), stable_unit_suspension(hopf, n).dim()));
}

bool is_quism(const Matrix& f, const HModule& m, const HModule& n) {
  HomologyData hm = homology(m);
  HomologyData hn = homology(n);
  if (hm.dim != hn.dim) return false;
  return hm.dim == 0 || is_invertible(induced_on_homology(f, hm, hn));
}

bool is_quism(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n) {
  return is_quism(f, m.as_hmodule(), n.as_hmodule());
}

bool is_sigma_quism(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n, int window) {
  HModule hm = m.as_hmodule();
  HModule hn = n.as_hmodule();
  for (int s = -window; s <= window; ++s)
    if (!is_quism(stable_suspend_map(f, m.hopf(), s), stable_suspend(hm, s), stable_suspend(hn, s))) return false;
  return true;
}

bool is_sigma_acyclic(const HModule& m, int window) {
  for (int s = -window; s <= window; ++s)
    if (homology(stable_suspend(m, s)).dim != 0) return false;
  return true;
}

bool is_sigma_acyclic(const EquivariantModule& m, int window) { return is_sigma_acyclic(m.as_hmodule(), window); }

// id ~ 0 iff id = lambda . g in End(M); above the size limit the equivalent
// projectivity test is used instead of the dim^2-sized solve.
bool is_contractible(const HModule& m) {
  if (m.dim() == 0) return true;
  if (m.dim() > 16) return is_projective(m);
  HModule end = hom_module(m, m);
  Matrix id = Matrix::identity(m.field(), m.dim()).vectorize();
  return solve(end.act(m.hopf()->left_integral()), id).has_value();
}

bool is_contractible(const EquivariantModule& m) { return is_contractible(m.as_hmodule()); }

LesVerdict long_exact_check(const ExtensionData& e, int window) {
  if (!e.is_exact) throw ValidationError("long_exact_check: the extension is not exact");
  if (!e.is_A_split()) throw ValidationError("long_exact_check: the extension is not A-split");
  const HopfPtr& hopf = e.m.hopf();
  const Field& f = e.m.field();
  TriangleData t = mapping_cone(e.i, e.l, e.m);
  // C_i -> N induced by (m, c) -> p(m); a quism for A-split rows.
  Matrix q = hstack({e.p, Matrix(f, e.n.dim(), cone(e.l).dim())}) * t.section;
  if (!is_equivariant_map(q, t.cone, e.n)) throw InternalError("long_exact_check: comparison map not equivariant");

  HModule l = e.l.as_hmodule(), m = e.m.as_hmodule(), n = e.n.as_hmodule(), c = t.cone.as_hmodule();
  HModule sl = suspend(l), sm = suspend(m);
  Matrix si = suspend_map(e.i, hopf, 1);
  LesVerdict v;
  auto exact_at = [&](const Matrix& in, const Matrix& out, std::size_t middle) {
    return (out * in).is_zero() && rank(in) + rank(out) == middle;
  };
  for (int s = -window; s <= window; ++s) {
    HomologyData hl = homology(stable_suspend(l, s));
    HomologyData hm = homology(stable_suspend(m, s));
    HomologyData hn = homology(stable_suspend(n, s));
    HomologyData hc = homology(stable_suspend(c, s));
    HomologyData hsl = homology(stable_suspend(sl, s));
    HomologyData hsm = homology(stable_suspend(sm, s));
    Matrix a = induced_on_homology(stable_suspend_map(e.i, hopf, s), hl, hm);
    Matrix b = induced_on_homology(stable_suspend_map(e.p, hopf, s), hm, hn);
    Matrix hq = induced_on_homology(stable_suspend_map(q, hopf, s), hc, hn);
    Matrix hd = induced_on_homology(stable_suspend_map(t.delta, hopf, s), hc, hsl);
    Matrix a2 = induced_on_homology(stable_suspend_map(si, hopf, s), hsl, hsm);
    const std::string tag = "n=" + std::to_string(s);
    if (!is_invertible(hq)) {
      v.ok = false;
      v.failures.push_back(tag + " comparison C_i -> N is not a quism");
      continue;
    }
    Matrix conn = hq.rows() == 0 ? Matrix(f, hsl.dim, 0) : hd * *inverse(hq);
    if (!conn.is_zero()) v.nonzero_connecting = true;
    if (!exact_at(a, b, hm.dim)) v.failures.push_back(tag + " at M");
    if (!exact_at(b, conn, hn.dim)) v.failures.push_back(tag + " at N");
    if (!exact_at(conn, a2, hsl.dim)) v.failures.push_back(tag + " at Sigma L");
    v.joints_checked += 3;
  }
  v.ok = v.ok && v.failures.empty();
  return v;
}

SurjectivityVerdict surjectivity_transfer(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n) {
  check_map(f, n.dim(), m.dim(), "surjectivity_transfer");
  HModule hm = m.as_hmodule(), hn = n.as_hmodule();
  const Field& fld = m.field();
  SurjectivityVerdict v;
  Subspace zm = invariants(hm), zn = invariants(hn);
  v.cycles_surjective = span_columns(fld, n.dim(), f * zm.basis_columns()) == zn;
  const Matrix& lambda = m.hopf()->left_integral();
  v.boundaries_surjective = image(f * hm.act(lambda)) == image(hn.act(lambda));
  return v;
}

}  // namespace hopfo
