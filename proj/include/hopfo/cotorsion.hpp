// Ext^1 over A#H, extensions from cocycles, projectivity and the
// catalog-level cotorsion-pair / Hovey-triple checks.
#pragma once

#include "hopfo/homotopy.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hopfo {

/// 0 -> K -> F -> M -> 0 with F free over A#H.
struct Presentation {
  EquivariantModule module;
  EquivariantModule free;
  Matrix projection;  // F -> M
  EquivariantModule kernel;
  Matrix inclusion;   // K -> F
};
Presentation presentation(const EquivariantModule& m);

struct Ext1Data {
  std::size_t dim = 0;
  Presentation pres;
  /// Hom(K, N) and the image of Hom(F, N) in it, as vectorized maps K -> N.
  Subspace cocycles;
  Subspace coboundaries;
  /// Cocycles K -> N whose classes form a basis of Ext^1(M, N).
  std::vector<Matrix> representatives;
  std::size_t n_dim = 0;
  bool is_coboundary(const Matrix& cocycle) const { return coboundaries.contains(cocycle.vectorize()); }
};
Ext1Data ext1(const EquivariantModule& m, const EquivariantModule& n);

/// 0 -> N -> (N (+) F) / {(c(k), -k)} -> M -> 0.
ExtensionData extension_from_cocycle(const Ext1Data& data, const EquivariantModule& n, const Matrix& cocycle);

/// Extensions 0 -> L -> L (+) N -> N -> 0 that are split over A: the H-action
/// is [[rho_L(h), theta(h)], [0, rho_N(h)]] with theta: H -> Hom_k(N, L)
/// satisfying theta(h h') = rho_L(h) theta(h') + theta(h) rho_N(h') and
/// theta(h) rho_N(a) = sum rho_L(h1 . a) theta(h2). Vectors stack the
/// row-major blocks theta(b_0), theta(b_1), ...
Subspace a_split_cocycle_space(const EquivariantModule& l, const EquivariantModule& n);
ExtensionData extension_from_a_split_cocycle(const EquivariantModule& l, const EquivariantModule& n,
                                             const Matrix& theta);
/// A random element of the A-split cocycle space (zero if the space is zero).
Matrix random_a_split_cocycle(const Subspace& space, std::mt19937_64& rng);

/// Projective over A#H, resp. U(M) projective over A.
bool is_projective_module(const EquivariantModule& m);
bool is_A_projective(const EquivariantModule& m);

struct SemiprojectiveVerdict {
  bool a_projective = false;
  /// Index into the acyclic catalog of the first T with hom_space(P, T) not
  /// Sigma-acyclic in the window.
  std::optional<std::size_t> failing_target;
  bool witnessed() const { return a_projective && !failing_target; }
};
/// Catalog-relative certificate: U(P) projective and hom_space(P, T)
/// Sigma-acyclic in the window for every T in `acyclic`.
SemiprojectiveVerdict semiprojective_witness(const EquivariantModule& p, const std::vector<EquivariantModule>& acyclic,
                                             int window);

struct NamedModule {
  std::string name;
  EquivariantModule module;
};

struct HoveyReport {
  std::vector<std::string> names;
  std::vector<bool> sigma_acyclic;
  std::vector<bool> semiprojective;
  std::vector<bool> projective;
  /// Number of individual checks per group (a)..(e) and their failures.
  std::size_t checked[5] = {0, 0, 0, 0, 0};
  std::vector<std::string> failures;
  std::optional<std::string> warning;
  int window = 3;
  bool ok() const { return failures.empty(); }
};
/// Catalog checks of the Hovey triple (Cof, Triv, Fib):
/// (a) Ext^1(P, T) = 0 for witnessed P and acyclic T; (b) witnessed and
/// acyclic implies projective; (c) projective implies witnessed and acyclic;
/// (d) Ext^1(P, Sigma^n T) = 0 implies T(P, Sigma^n T) = 0; (e) Triv is
/// closed under sums, summands and cones of maps between its members.
HoveyReport hovey_triple_report(const std::vector<NamedModule>& catalog, int window, std::uint64_t seed);

struct ContractiblePairReport {
  std::vector<std::string> contractible;
  std::size_t samples = 0;
  std::size_t split = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// For every contractible T and every M in the catalog, samples A-split
/// extensions 0 -> T -> E -> M -> 0 and checks that they split.
ContractiblePairReport contractible_pair_report(const std::vector<NamedModule>& catalog,
                                                std::size_t samples_per_pair, std::uint64_t seed);

}  // namespace hopfo
