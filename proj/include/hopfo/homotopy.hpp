// Homotopies, stable homs, mapping cones and the homological predicates
// (quisms, acyclicity, contractibility, long exact sequences).
#pragma once

#include "hopfo/equivariant.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfo {

/// A short sequence 0 -> L -> M -> N -> 0 of equivariant modules.
struct ExtensionData {
  EquivariantModule l;
  EquivariantModule m;
  EquivariantModule n;
  Matrix i;  // L -> M
  Matrix p;  // M -> N
  bool is_exact = false;
  /// A-linear retraction r of i (r i = id), when one exists.
  std::optional<Matrix> a_retraction;
  /// Equivariant retraction, when one exists.
  std::optional<Matrix> retraction;
  bool is_A_split() const { return a_retraction.has_value(); }
  bool is_split() const { return retraction.has_value(); }
};

/// Checks equivariance of i and p and exactness, then solves for both
/// retractions. Throws ValidationError if i or p is not equivariant or
/// p i != 0.
ExtensionData make_extension(EquivariantModule l, EquivariantModule m, EquivariantModule n, Matrix i, Matrix p);

/// A-linear retraction of e.i.
std::optional<Matrix> is_A_split(const ExtensionData& e);

/// phi: C(M) -> N equivariant with phi (1 (x) lambda) = f - g, or nullopt.
std::optional<Matrix> is_homotopic(const Matrix& f, const Matrix& g, const EquivariantModule& m,
                                   const EquivariantModule& n);

struct StableHomData {
  std::size_t dim = 0;
  /// Equivariant maps M -> N whose classes form a basis of T(M, N).
  std::vector<Matrix> representatives;
  /// dim H(hom_space(M, N)), computed independently; always equal to dim.
  std::size_t homology_dim = 0;
  std::size_t equivariant_dim = 0;
  std::size_t null_homotopic_dim = 0;
};
/// T(M, N) as equivariant maps modulo those factoring through i_M, compared
/// with H(hom_space(M, N)); throws InternalError if the two disagree.
StableHomData stable_hom(const EquivariantModule& m, const EquivariantModule& n);

struct TriangleData {
  EquivariantModule m;
  EquivariantModule n;
  Matrix f;
  EquivariantModule cone;  // C_f = (N (+) C(M)) / {(f(m), -i_M(m))}
  Matrix j;                // N -> C_f
  Matrix k;                // C(M) -> C_f
  Matrix delta;            // C_f -> Sigma(M)
  EquivariantModule suspension;
  Matrix section;          // C_f -> N (+) C(M), a linear splitting of the quotient
};
/// The standard triangle of f; throws InternalError if 0 -> N -> C_f -> Sigma M -> 0
/// fails to be exact.
TriangleData mapping_cone(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n);

struct ConeSplittingVerdict {
  std::optional<Matrix> homotopy;        // witness for f ~ 0
  std::optional<Matrix> cone_retraction;  // equivariant r with r j_f = id_N
  bool agree() const { return homotopy.has_value() == cone_retraction.has_value(); }
};
/// f ~ 0 iff 0 -> N -> C_f -> Sigma M -> 0 splits; both sides computed.
ConeSplittingVerdict null_homotopy_iff_cone_splits(const Matrix& f, const EquivariantModule& m,
                                                   const EquivariantModule& n);

/// f (x) 1 on Sigma^n.
Matrix suspend_map(const Matrix& f, const HopfPtr& hopf, int n);
/// f (x) 1 on stable_suspend(-, n). The window predicates below work with
/// stable_suspend, which has the same homology as Sigma^n, naturally in M.
Matrix stable_suspend_map(const Matrix& f, const HopfPtr& hopf, int n);

bool is_quism(const Matrix& f, const HModule& m, const HModule& n);
bool is_quism(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n);
/// Sigma^n f is a quism for every n in [-window, window].
bool is_sigma_quism(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n, int window);
/// H(Sigma^n M) = 0 for every n in [-window, window].
bool is_sigma_acyclic(const HModule& m, int window);
bool is_sigma_acyclic(const EquivariantModule& m, int window);
/// id_M ~ 0 in lMod H, i.e. id lies in B(End(M)).
bool is_contractible(const HModule& m);
bool is_contractible(const EquivariantModule& m);

struct LesVerdict {
  bool ok = true;
  /// Joint failures as "n=<shift> at <L|M|N>".
  std::vector<std::string> failures;
  std::size_t joints_checked = 0;
  /// Whether any connecting map was nonzero.
  bool nonzero_connecting = false;
};
/// For an A-split extension, the long exact homology sequence of
/// Sigma^n L -> Sigma^n M -> Sigma^n N -> Sigma^n Sigma L -> Sigma^n Sigma M
/// for n in [-window, window], with the connecting map read off the standard
/// triangle of i.
LesVerdict long_exact_check(const ExtensionData& e, int window);

/// For a surjective quism f, B(f) and Z(f) are surjective.
struct SurjectivityVerdict {
  bool cycles_surjective = false;
  bool boundaries_surjective = false;
};
SurjectivityVerdict surjectivity_transfer(const Matrix& f, const EquivariantModule& m, const EquivariantModule& n);

}  // namespace hopfo
