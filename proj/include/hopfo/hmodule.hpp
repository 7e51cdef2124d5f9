// Finite-dimensional left H-modules: tensor and hom modules, the homology
// functor, cone and suspension, freeness tests.
#pragma once

#include "hopfo/hopf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfo {

class HModule {
 public:
  /// Wraps a representation of hopf->algebra() without checking it.
  HModule(HopfPtr hopf, Representation rep);

  const HopfPtr& hopf() const { return hopf_; }
  const Field& field() const { return hopf_->field(); }
  std::size_t dim() const { return rep_.dim(); }
  const Matrix& action(std::size_t i) const { return rep_.action(i); }
  const std::vector<Matrix>& actions() const { return rep_.actions(); }
  Matrix act(const Matrix& element) const { return rep_.act(element); }
  const Representation& rep() const { return rep_; }

 private:
  HopfPtr hopf_;
  Representation rep_;
};

/// Throws ValidationError naming the first pair (i,j) where the action fails to
/// be multiplicative.
HModule validate_module(const HopfPtr& hopf, std::vector<Matrix> action);

HModule zero_module(const HopfPtr& hopf);
/// k with h acting by epsilon(h).
HModule trivial_module(const HopfPtr& hopf);
HModule regular_module(const HopfPtr& hopf);
HModule free_module(const HopfPtr& hopf, std::size_t rank);
HModule direct_sum(const HModule& m, const HModule& n);
HModule direct_sum(const std::vector<HModule>& ms);

/// H/(lambda) with (lambda) = k*lambda, together with the projection H -> H/(lambda).
struct QuotientModuleData {
  HModule module;
  Matrix proj;
  Matrix section;
};
QuotientModuleData quotient_by_integral(const HopfPtr& hopf);

/// Ker epsilon with its inclusion into H.
struct SubmoduleWithInclusion {
  HModule module;
  Matrix inclusion;
};
SubmoduleWithInclusion counit_kernel_module(const HopfPtr& hopf);

/// M (x) N with H acting through Delta; basis index i * dim N + j.
HModule tensor(const HModule& m, const HModule& n);
/// Action of one element of H on M (x) N.
Matrix tensor_action(const HModule& m, const HModule& n, const Matrix& element);
/// Tensor product of a list, associated from the left.
HModule tensor(const std::vector<HModule>& ms);

/// All k-linear maps M -> N (row-major vectorized dim N x dim M matrices) with
/// (h f) = sum rho_N(h2) f rho_M(S^-1(h1)).
HModule hom_module(const HModule& m, const HModule& n);

/// Equivariant maps M -> N.
Subspace equivariant_maps(const HModule& m, const HModule& n);
bool is_equivariant(const Matrix& f, const HModule& m, const HModule& n);

struct HomologyData {
  Subspace cycles;            // Z(M): invariants
  Subspace boundaries;        // B(M): image of rho(lambda)
  std::size_t dim = 0;        // dim Z - dim B
  Matrix representatives;     // dim M x dim, lifts of a basis of H(M)
  Matrix to_homology;         // dim x dim M, defined on Z: z -> class of z
};
HomologyData homology(const HModule& m);
/// Z(M) alone (the invariants).
Subspace invariants(const HModule& m);

/// Matrix of H(f): H(M) -> H(N) in the representative bases.
Matrix induced_on_homology(const Matrix& f, const HomologyData& hm, const HomologyData& hn);

/// C(M) = M (x) H, Sigma(M) = M (x) H/(lambda), Sigma^-1(M) = M (x) Ker epsilon.
HModule cone(const HModule& m);
HModule suspend(const HModule& m);
HModule desuspend(const HModule& m);
/// Sigma^n for any integer n.
HModule suspend_n(const HModule& m, int n);

/// i_M = 1 (x) lambda: M -> C(M).
Matrix cone_inclusion(const HModule& m);
/// p_M = 1 (x) proj: C(M) -> Sigma(M).
Matrix cone_projection(const HModule& m);
/// 1 (x) epsilon: C(M) -> M.
Matrix cone_counit(const HModule& m);

/// Rank r with M isomorphic to H^r, or nullopt.
std::optional<std::size_t> is_free(const HModule& m);
bool is_projective(const HModule& m);
/// The projectivity test by solving for a section of the free cover; exact
/// but expensive on large modules.
bool has_projective_section(const HModule& m);
/// One-dimensional module given by hopf->characters()[i].
HModule character_module(const HopfPtr& hopf, std::size_t i);

/// Equivariant isomorphism r: V (x) H -> H (x) V, natural in V, with
/// r (v (x) lambda) = lambda (x) v.
Matrix switching_iso(const HModule& v);
/// The element a of H used by switching_iso.
Matrix switching_element(const HopfAlgebra& h);

/// Jordan type of the action of d (basis element 1) for divided_power_p;
/// sizes sorted decreasingly.
std::vector<std::size_t> jordan_decompose(const HModule& m);
/// The module J_k over divided_power_p, basis e_0..e_{k-1} with d e_i = e_{i+1}.
HModule jordan_module(const HopfPtr& hopf, std::size_t k);

struct DecompositionReport {
  std::size_t trivial_multiplicity = 0;
  HModule complement;
  Matrix forward;   // M -> k^a (+) Q
  Matrix backward;  // k^a (+) Q -> M
};
/// Splits trivial summands off greedily.
DecompositionReport split_off_trivials(const HModule& m);

/// True iff there is an equivariant isomorphism between m and n. Uses the
/// witness search below; intended for small modules.
std::optional<std::pair<Matrix, Matrix>> find_isomorphism(const HModule& m, const HModule& n);

/// M = R (+) P with P projective and R without projective summands; returns
/// R. Needs every simple to be a character (otherwise M is returned as is);
/// over a semisimple H the result is zero.
HModule projective_free_part(const HModule& m);
/// The projective-free part of Sigma^n k; cached per algebra and n.
HModule stable_unit_suspension(const HopfPtr& hopf, int n);
/// M (x) stable_unit_suspension(n): stably isomorphic to Sigma^n M, so it has
/// the same homology, functorially in M.
HModule stable_suspend(const HModule& m, int n);

}  // namespace hopfo
