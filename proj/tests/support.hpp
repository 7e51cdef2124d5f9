// Shared fixtures: small module catalogs and seeded random objects.
#pragma once

#include "hopfo/equivariant.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

using namespace hopfo;

inline const std::vector<std::string>& hopf_names() {
  static const std::vector<std::string> names{
      "divided_power:2", "divided_power:3", "divided_power:5", "group:q:2",
      "group:3:3",       "sweedler:3",      "taft:2:3",        "taft:4:5"};
  return names;
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> val(-3, 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, val(rng));
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

/// The same module in a random basis.
inline HModule conjugate(const HModule& m, std::mt19937_64& rng) {
  if (m.dim() == 0) return m;
  Matrix p = random_invertible(m.field(), m.dim(), rng);
  Matrix pinv = *inverse(p);
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(p * a * pinv);
  return HModule(m.hopf(), Representation(m.hopf()->algebra(), m.dim(), std::move(action)));
}

/// Small modules used across the suites: k, H, H/(lambda), Ker epsilon,
/// characters, Jordan blocks for divided powers, and a few sums/tensors.
inline std::vector<HModule> small_modules(const HopfPtr& h) {
  std::vector<HModule> out{trivial_module(h), regular_module(h), quotient_by_integral(h).module,
                           counit_kernel_module(h).module};
  if (h->family() == "divided_power") {
    for (std::size_t k = 2; k < h->dim(); ++k) out.push_back(jordan_module(h, k));
    out.push_back(direct_sum(jordan_module(h, 1), jordan_module(h, h->dim() > 2 ? 2 : 1)));
  }
  for (std::size_t i = 0; i < h->characters().size() && i < 3; ++i) {
    HModule chi = character_module(h, i);
    bool is_trivial = true;
    for (std::size_t b = 0; b < h->dim(); ++b) is_trivial = is_trivial && chi.action(b).at(0, 0) == h->counit(b);
    if (!is_trivial) out.push_back(chi);
  }
  out.push_back(direct_sum(trivial_module(h), regular_module(h)));
  if (h->dim() <= 5) out.push_back(tensor(quotient_by_integral(h).module, quotient_by_integral(h).module));
  return out;
}

/// Random equivariant map m -> n (a random combination of a hom basis).
inline Matrix random_equivariant(const HModule& m, const HModule& n, std::mt19937_64& rng) {
  Subspace homs = equivariant_maps(m, n);
  Matrix out(m.field(), n.dim(), m.dim());
  std::uniform_int_distribution<int> val(-3, 3);
  for (std::size_t i = 0; i < homs.dim(); ++i) {
    out.add_scaled(Scalar(m.field(), val(rng)), hom_basis_matrix(homs, i, n.dim(), m.dim()));
  }
  return out;
}

/// The (A, H) pairs used by the equivariant suites.
inline const std::vector<std::pair<std::string, std::string>>& category_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{
      {"k", "divided_power:2"},
      {"k", "divided_power:3"},
      {"truncpoly:2", "divided_power:2"},
      {"k", "sweedler:3"},
      {"a2quiver", "divided_power:2"},
      {"truncpoly:3", "divided_power:3"},
      {"truncpoly:2", "sweedler:3"}};
  return pairs;
}

inline SmashPtr pair_smash(const std::pair<std::string, std::string>& pr) {
  HopfPtr h = catalog_hopf(pr.second);
  return pr.first == "k" ? unit_smash(h) : SmashAlgebra::create(catalog_category(h, pr.first));
}

/// Representation of the a2quiver category: V_x -> V_y given by `arrow`.
inline Representation quiver_module(const CategoryPtr& cat, const Matrix& arrow) {
  const Field& f = cat->field();
  const std::size_t q = arrow.rows(), p = arrow.cols(), d = p + q;
  Matrix ex(f, d, d), ey(f, d, d), a(f, d, d);
  for (std::size_t i = 0; i < p; ++i) ex.set(i, i, 1);
  for (std::size_t i = 0; i < q; ++i) ey.set(p + i, p + i, 1);
  a.set_block(p, 0, arrow);
  return validated_representation(cat->algebra(), d, {ex, ey, a});
}

/// k[x]/(x^j) as a module over a truncated polynomial category.
inline Representation truncated_module(const CategoryPtr& cat, std::size_t j) {
  const Field& f = cat->field();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < cat->dim(); ++i) {
    Matrix a(f, j, j);
    for (std::size_t r = 0; r + i < j; ++r) a.set(r + i, r, 1);
    action.push_back(a);
  }
  return validated_representation(cat->algebra(), j, std::move(action));
}

/// A few A-modules (not H-equivariant) for each catalog category.
inline std::vector<Representation> a_modules(const CategoryPtr& cat) {
  const Field& f = cat->field();
  std::vector<Representation> out{regular_representation(cat->algebra())};
  if (cat->name() == "k") {
    out.push_back(free_representation(cat->algebra(), 2));
  } else if (cat->name() == "a2quiver") {
    out.push_back(quiver_module(cat, Matrix(f, {{1}})));
    out.push_back(quiver_module(cat, Matrix(f, 0, 1)));
    out.push_back(quiver_module(cat, Matrix(f, {{1, 0}, {0, 1}})));
  } else {
    for (std::size_t j = 1; j < cat->dim(); ++j) out.push_back(truncated_module(cat, j));
  }
  return out;
}

/// Equivariant modules used across the suites: for A = k the small H-modules,
/// otherwise A itself, A#H, C(N), E(N), and A (x) V for small H-modules V.
inline std::vector<EquivariantModule> equivariant_catalog(const SmashPtr& s) {
  std::vector<EquivariantModule> out;
  HopfPtr h = s->hopf();
  if (s->base()->name() == "k") {
    for (const auto& m : small_modules(h)) out.push_back(from_hmodule(m));
    out.push_back(from_hmodule(cone(trivial_module(h))));
    return out;
  }
  EquivariantModule a = category_module(s);
  out.push_back(a);
  out.push_back(free_equivariant(s, 1));
  for (const auto& n : a_modules(s->base())) {
    out.push_back(cone_adjoint_C(s, n));
    out.push_back(E_functor(s, n));
  }
  for (const auto& v : small_modules(h)) {
    if (out.size() >= 14) break;
    if (v.dim() <= 2 * h->dim()) out.push_back(tensor_with_hmodule(a, v));
  }
  return out;
}

inline Matrix random_in(const Subspace& homs, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix out(homs.field(), rows, cols);
  std::uniform_int_distribution<int> val(-3, 3);
  for (std::size_t i = 0; i < homs.dim(); ++i)
    out.add_scaled(Scalar(homs.field(), val(rng)), hom_basis_matrix(homs, i, rows, cols));
  return out;
}

}  // namespace support
