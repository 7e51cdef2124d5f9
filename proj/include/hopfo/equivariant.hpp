// H-module categories (object-graded H-module algebras), smash products and
// equivariant modules, with the functors C -| U -| E.
#pragma once

#include "hopfo/hmodule.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfo {

/// Unvalidated category data. Basis element i is a morphism
/// source[i] -> target[i]; compose holds b_i o b_j = sum c b_k as (i,j,k,c).
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<std::string> basis;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;
  std::vector<StructureTerm> compose;
  /// Identity morphism of each object, as a basis index.
  std::vector<std::size_t> identities;
  /// One matrix per basis element of H acting on the span of the morphisms.
  std::vector<Matrix> h_action;
  std::string name;
};

class HModuleCategory;
using CategoryPtr = std::shared_ptr<const HModuleCategory>;

class HModuleCategory {
 public:
  /// Checks grading, associativity, units, that the H-action is a module
  /// structure preserving each hom block, h.id_x = eps(h) id_x and the
  /// enrichment identity h.(g o f) = sum (h1.g) o (h2.f).
  static CategoryPtr validate(const HopfPtr& hopf, const RawCategory& raw);

  const HopfPtr& hopf() const { return hopf_; }
  const Field& field() const { return hopf_->field(); }
  const RawCategory& raw() const { return raw_; }
  const std::string& name() const { return raw_.name; }
  std::size_t dim() const { return raw_.basis.size(); }
  std::size_t object_count() const { return raw_.objects.size(); }
  /// Composition algebra of all morphisms, with unit the sum of identities.
  const AlgebraPtr& algebra() const { return algebra_; }
  /// H acting on the morphisms.
  const Matrix& h_action(std::size_t i) const { return raw_.h_action[i]; }
  Matrix act_on_morphisms(const Matrix& h_element) const;
  /// Dimension of the block A(x, y).
  std::size_t hom_dim(std::size_t x, std::size_t y) const;

 private:
  HModuleCategory() = default;
  HopfPtr hopf_;
  RawCategory raw_;
  AlgebraPtr algebra_;
};

/// k (one object, trivial action); truncpoly:n (k[x]/(x^n), d acting as d/dx
/// over divided powers when p | n, trivially otherwise; truncpoly:n:trivial
/// forces the trivial action); a2quiver (x -> y, trivial action).
CategoryPtr catalog_category(const HopfPtr& hopf, const std::string& spec);
CategoryPtr unit_category(const HopfPtr& hopf);

class SmashAlgebra;
using SmashPtr = std::shared_ptr<const SmashAlgebra>;

/// A#H with basis index a * dim H + h and product
/// (a (x) h)(b (x) g) = sum a o (h1 . b) (x) h2 g.
class SmashAlgebra {
 public:
  static SmashPtr create(const CategoryPtr& cat);

  const CategoryPtr& base() const { return base_; }
  const HopfPtr& hopf() const { return base_->hopf(); }
  const Field& field() const { return base_->field(); }
  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_->dim(); }
  /// a (x) 1 and 1 (x) h as elements of A#H.
  Matrix from_category(const Matrix& a) const;
  Matrix from_hopf(const Matrix& h) const;

 private:
  SmashAlgebra() = default;
  CategoryPtr base_;
  AlgebraPtr algebra_;
};

/// The same algebra as A#H for A = k; cached per Hopf algebra.
SmashPtr unit_smash(const HopfPtr& hopf);

/// An H-equivariant A-module, stored as a module over A#H.
class EquivariantModule {
 public:
  EquivariantModule(SmashPtr smash, Representation rep);

  const SmashPtr& smash() const { return smash_; }
  const CategoryPtr& category() const { return smash_->base(); }
  const HopfPtr& hopf() const { return smash_->hopf(); }
  const Field& field() const { return smash_->field(); }
  std::size_t dim() const { return rep_.dim(); }
  const Representation& rep() const { return rep_; }

  /// Action of the i-th morphism of A, and of the i-th basis element of H.
  Matrix a_action(std::size_t i) const;
  Matrix h_action(std::size_t i) const;
  std::vector<Matrix> a_actions() const;
  std::vector<Matrix> h_actions() const;
  /// dim M(x) for each object.
  std::vector<std::size_t> object_grading() const;

  /// The underlying H-module (forgets A).
  HModule as_hmodule() const;
  /// U(M): the underlying A-module.
  Representation forget() const;

 private:
  SmashPtr smash_;
  Representation rep_;
};

/// Builds rho(a (x) h) = rho_A(a) rho_H(h) and checks the A-module, H-module
/// and compatibility axioms, naming the first failure.
EquivariantModule make_equivariant(const SmashPtr& smash, std::vector<Matrix> a_action,
                                   std::vector<Matrix> h_action);
/// Validates a module over A#H given directly.
EquivariantModule from_smash_module(const SmashPtr& smash, std::vector<Matrix> action);
/// An H-module viewed over A = k.
EquivariantModule from_hmodule(const HModule& m);

EquivariantModule zero_equivariant(const SmashPtr& smash);
EquivariantModule direct_sum(const EquivariantModule& m, const EquivariantModule& n);
EquivariantModule direct_sum(const std::vector<EquivariantModule>& ms);
/// A#H as a left module over itself.
EquivariantModule free_equivariant(const SmashPtr& smash, std::size_t rank);
/// A with its own H-action (the module "A (x) k").
EquivariantModule category_module(const SmashPtr& smash);

bool is_equivariant_map(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n);
/// Equivariant A-linear maps M -> N (vectorized).
Subspace equivariant_homs(const EquivariantModule& m, const EquivariantModule& n);

/// M (x) V: A acts on M, H diagonally.
EquivariantModule tensor_with_hmodule(const EquivariantModule& m, const HModule& v);
EquivariantModule cone(const EquivariantModule& m);
EquivariantModule suspend(const EquivariantModule& m);
EquivariantModule desuspend(const EquivariantModule& m);
EquivariantModule suspend_n(const EquivariantModule& m, int n);
/// i_M, p_M and 1 (x) epsilon as in the H-module case.
Matrix cone_inclusion(const EquivariantModule& m);
Matrix cone_projection(const EquivariantModule& m);
Matrix cone_counit(const EquivariantModule& m);

/// A-linear maps M -> N with H acting by (h f) = sum h2 f S^-1(h1).
struct HomSpace {
  Subspace maps;      // A-linear maps, vectorized dim N x dim M
  HModule module;     // the H-action in the echelon basis of `maps`
  HomologyData homology;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// The map with the given coordinates.
  Matrix map(const Matrix& coords) const;
  /// Coordinates of an A-linear map.
  Matrix coordinates(const Matrix& f) const;
};
HomSpace hom_space(const EquivariantModule& m, const EquivariantModule& n);

/// C(N) = N (x) H for an A-module N: g.(n (x) h) = n (x) gh and
/// a.(n (x) h) = sum (S^-1(h1).a) n (x) h2.
EquivariantModule cone_adjoint_C(const SmashPtr& smash, const Representation& n);
/// E(N) = linear maps H -> N: (g.psi)(h) = psi(S(g) h) and
/// (a.psi)(h) = sum (S^-1(h2).a) psi(h1). Basis index j * dim N + n.
EquivariantModule E_functor(const SmashPtr& smash, const Representation& n);

/// Phi(f)(m)(h) = f(S^-1(h) m) for an A-linear f: U(M) -> N.
Matrix adjunction_phi(const EquivariantModule& m, const Representation& n, const Matrix& f);
/// Psi(g)(m) = g(m)(1) for an equivariant g: M -> E(N).
Matrix adjunction_psi(const EquivariantModule& m, const Representation& n, const Matrix& g);

/// Unit N -> U C(N), n -> n (x) 1, and counit C(U M) -> M, n (x) h -> h n.
Matrix cone_adjunction_unit(const SmashPtr& smash, const Representation& n);
Matrix cone_adjunction_counit(const EquivariantModule& m);

}  // namespace hopfo
