// Finite-dimensional associative algebras by structure constants, and their
// finite-dimensional left modules.
#pragma once

#include "hopfo/matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfo {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// An associative unital algebra with basis b_0..b_{n-1}. Column j of
/// left_mult(i) is the coordinate vector of b_i b_j.
class Algebra {
 public:
  /// Checks associativity and the unit; throws ValidationError naming the
  /// first offending basis pair.
  static AlgebraPtr create(const Field& field, std::vector<Matrix> left_mult, Matrix unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return left_mult_.size(); }
  const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
  /// Left multiplication by an arbitrary element (column vector).
  Matrix left_mult_of(const Matrix& element) const;
  Matrix multiply(const Matrix& u, const Matrix& v) const { return left_mult_of(u) * v; }
  const Matrix& unit() const { return unit_; }
  Matrix basis_vector(std::size_t i) const { return Matrix::unit_vector(field_, dim(), i); }

  /// Elements that generate the algebra together with the unit. Module maps
  /// only need to commute with these.
  const std::vector<Matrix>& generators() const { return generators_; }

 private:
  Algebra(const Field& field, std::vector<Matrix> left_mult, Matrix unit)
      : field_(field), left_mult_(std::move(left_mult)), unit_(std::move(unit)) {}
  void compute_generators();

  Field field_;
  std::vector<Matrix> left_mult_;
  Matrix unit_;
  std::vector<Matrix> generators_;
};

/// A left module: one dim x dim matrix per basis element of the algebra.
class Representation {
 public:
  /// Wraps action matrices without checking the module axioms.
  Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

  /// Full check of rho(1) = I and rho(b_i) rho(b_j) = rho(b_i b_j) for all
  /// basis pairs. Returns a message naming the first violated pair.
  std::optional<std::string> check_axioms() const;
  /// Cheaper equivalent check: rho(g) rho(b_j) = rho(g b_j) for algebra
  /// generators g only (sufficient once rho(1) = I).
  std::optional<std::string> check_axioms_fast() const;

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Action of an arbitrary algebra element.
  Matrix act(const Matrix& element) const;
  const std::vector<Matrix>& generator_actions() const { return generator_action_; }

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::vector<Matrix> generator_action_;
};

/// Throws ValidationError if the axioms fail.
Representation validated_representation(AlgebraPtr algebra, std::size_t dim,
                                        std::vector<Matrix> action);

Representation regular_representation(const AlgebraPtr& algebra);
/// Free module of the given rank; basis index = copy * dim(algebra) + i.
Representation free_representation(const AlgebraPtr& algebra, std::size_t rank);
Representation zero_representation(const AlgebraPtr& algebra);
Representation direct_sum(const Representation& m, const Representation& n);

/// f: m -> n (dim n x dim m) commutes with the action.
bool is_intertwiner(const Matrix& f, const Representation& m, const Representation& n);
/// Subspace spanned by the columns is invariant under the action.
bool is_invariant_subspace(const Subspace& s, const Representation& m);

struct SubmoduleData {
  Representation module;
  Matrix inclusion;  // dim m x dim sub, columns = echelon basis of the subspace
};
/// Restriction to an invariant subspace. Throws ValidationError if the
/// subspace is not invariant.
SubmoduleData submodule(const Representation& m, const Subspace& s);

struct QuotientData {
  Representation module;
  Matrix proj;
  Matrix section;
};
QuotientData quotient_module(const Representation& m, const Subspace& s);

/// The submodule generated by a set of vectors (columns).
Subspace generated_submodule(const Representation& m, const Matrix& vectors);

/// A generating set for m chosen greedily among the standard basis vectors.
std::vector<Matrix> module_generators(const Representation& m);

/// Hom(m, n) as a subspace of row-major vectorized (dim n x dim m) matrices.
Subspace intertwiners(const Representation& m, const Representation& n);
/// The i-th echelon basis vector of a hom subspace reshaped to a matrix.
Matrix hom_basis_matrix(const Subspace& homs, std::size_t i, std::size_t rows, std::size_t cols);

struct FreeCover {
  Representation free;         // algebra^rank
  Matrix projection;           // free -> m
  std::vector<Matrix> images;  // generator images in m
};
FreeCover free_cover(const Representation& m);

/// A module section of the free cover projection, present iff m is projective.
std::optional<Matrix> projective_section(const Representation& m);

/// An isomorphism algebra^r -> m (columns indexed like free_representation),
/// found by a deterministic search; nullopt if none was found (in particular
/// whenever m is not free).
std::optional<Matrix> free_basis_iso(const Representation& m);

/// Solve for a module map x: src -> dst with the given linear side
/// condition: every x in the affine space {x intertwining, lhs * vec(x) = rhs}.
/// Returns one solution, or nullopt.
std::optional<Matrix> solve_intertwiner(const Representation& src, const Representation& dst,
                                        const Matrix& lhs, const Matrix& rhs);

/// Matrix of the linear map vec(X) -> vec(X * b) for X of shape rows x b.rows().
Matrix right_composition_operator(const Matrix& b, std::size_t rows);
/// Matrix of vec(X) -> vec(a * X) for X of shape a.cols() x cols.
Matrix left_composition_operator(const Matrix& a, std::size_t cols);

/// An isomorphism m -> n with its inverse, found among random combinations of
/// a hom basis (deterministic seed); nullopt if none was found.
std::optional<std::pair<Matrix, Matrix>> find_module_isomorphism(const Representation& m,
                                                                 const Representation& n);

}  // namespace hopfo
