// Finite-dimensional Hopf algebras given by structure constants.
#pragma once

#include "hopfo/algebra.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hopfo {

/// One nonzero structure constant. For multiplication: b_i b_j has
/// coefficient `coeff` on b_k. For comultiplication: Delta(b_i) has
/// coefficient `coeff` on b_j (x) b_k.
struct StructureTerm {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar coeff;
};

/// Unvalidated presentation, as read from a file or built by the catalog.
struct RawHopf {
  Field field = Field::rationals();
  std::vector<std::string> basis;
  Matrix unit = Matrix(Field::rationals(), 0, 1);
  std::vector<StructureTerm> mult;
  std::vector<StructureTerm> comult;
  std::vector<Scalar> counit;
  Matrix antipode = Matrix(Field::rationals(), 0, 0);
  /// Catalog family ("divided_power", "group", "taft", "sweedler") and its
  /// parameters; empty for user-supplied algebras.
  std::string family;
  std::vector<std::int64_t> params;
};

/// Delta(h) = sum coeff * b_left (x) b_right, zero terms dropped, ordered by
/// (left, right).
struct SweedlerTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};
using SweedlerExpansion = std::vector<SweedlerTerm>;

/// A primitive idempotent e with H e the projective cover of a character, and
/// an element spanning the (one-dimensional) socle of H e.
struct ProjectiveCover {
  Matrix idempotent;
  Matrix socle;
};

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

class HopfAlgebra {
 public:
  /// Checks every Hopf axiom and computes the cached data (S^-1, the left
  /// integral, Ker epsilon). Throws ValidationError naming the first violated
  /// axiom and the offending basis indices.
  static HopfPtr validate(const RawHopf& raw);

  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return algebra_->dim(); }
  const std::vector<std::string>& labels() const { return raw_.basis; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const RawHopf& raw() const { return raw_; }
  const std::string& family() const { return raw_.family; }
  const std::vector<std::int64_t>& params() const { return raw_.params; }
  /// Human-readable catalog name such as "divided_power:3".
  std::string name() const;

  const Matrix& unit() const { return algebra_->unit(); }
  const Scalar& counit(std::size_t i) const { return raw_.counit[i]; }
  Scalar counit_of(const Matrix& element) const;
  const SweedlerExpansion& comult(std::size_t i) const { return comult_[i]; }
  const Matrix& antipode() const { return raw_.antipode; }
  const Matrix& antipode_inverse() const { return antipode_inverse_; }
  /// Normalized: first nonzero coordinate equals 1.
  const Matrix& left_integral() const { return left_integral_; }
  const Subspace& counit_kernel() const { return counit_kernel_; }
  /// The one-dimensional left submodule k*lambda of the regular module.
  const Subspace& integral_ideal() const { return integral_ideal_; }
  /// epsilon(lambda) != 0.
  bool is_semisimple() const { return !counit_of(left_integral_).is_zero(); }
  Matrix basis_vector(std::size_t i) const { return algebra_->basis_vector(i); }

  /// Algebra maps H -> k (as 1 x dim rows), found over small prime fields.
  const std::vector<Matrix>& characters() const { return characters_; }
  /// Every simple module is one of the characters, i.e. the common kernel of
  /// the characters is nilpotent. Then every projective cover of a simple has
  /// dimension dim H / #characters.
  bool simples_are_characters() const { return simples_are_characters_; }
  /// One entry per character when simples_are_characters() and H is not
  /// semisimple; empty otherwise.
  const std::vector<ProjectiveCover>& projective_covers() const { return projective_covers_; }

 private:
  void compute_characters();

  HopfAlgebra() = default;

  RawHopf raw_;
  AlgebraPtr algebra_;
  std::vector<SweedlerExpansion> comult_;
  Matrix antipode_inverse_ = Matrix(Field::rationals(), 0, 0);
  Matrix left_integral_ = Matrix(Field::rationals(), 0, 1);
  Subspace counit_kernel_ = Subspace(Field::rationals(), 0);
  Subspace integral_ideal_ = Subspace(Field::rationals(), 0);
  std::vector<Matrix> characters_;
  bool simples_are_characters_ = false;
  std::vector<ProjectiveCover> projective_covers_;
};

inline HopfPtr validate_hopf(const RawHopf& raw) { return HopfAlgebra::validate(raw); }

/// Solution space of {b_i x = epsilon(b_i) x}, normalized; throws
/// ValidationError unless it is one-dimensional.
Matrix left_integral(const HopfAlgebra& h);
Matrix antipode_inverse(const HopfAlgebra& h);

/// Built-in algebras.
HopfPtr divided_power(std::uint64_t p);
/// Group algebra of Z/n_1 x ... x Z/n_r over the given field.
HopfPtr group_algebra(const Field& field, const std::vector<std::uint64_t>& invariant_factors);
/// Taft algebra T_n over GF(p); requires n >= 2 and n | p - 1.
HopfPtr taft(std::uint64_t n, std::uint64_t p);
/// Sweedler's four-dimensional algebra over GF(p), p odd.
HopfPtr sweedler(std::uint64_t p);

/// Catalog lookup by shorthand: divided_power:p, group:<p|q>:n1[:n2...],
/// taft:n:p, sweedler:p.
HopfPtr catalog_hopf(const std::string& spec);

/// Smallest generator of GF(p)^*.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace hopfo
