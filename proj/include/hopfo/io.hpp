// JSON ingestion and emission for Hopf algebras, modules, categories and
// equivariant modules, plus the shorthand names accepted on the command line.
#pragma once

#include "hopfo/equivariant.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace hopfo {

using Json = nlohmann::ordered_json;

/// Malformed input: unreadable file, bad JSON, missing or mistyped field.
class InputError : public Error {
 public:
  using Error::Error;
};

Json read_json_file(const std::filesystem::path& path);

/// Scalars are integers or "a/b" strings; matrices are lists of rows.
Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where);
Json scalar_to_json(const Scalar& s);
Matrix matrix_from_json(const Field& f, const Json& j, const std::string& where);
Json matrix_to_json(const Matrix& m);
/// A column vector as a flat list.
Json vector_to_json(const Matrix& v);

RawHopf raw_hopf_from_json(const Json& j);
/// Canonical form: terms sorted by (i, j, k), zero terms dropped.
Json hopf_to_json(const HopfAlgebra& h);

/// A catalog name (divided_power:3, taft:2:3, ...) or a path to hopf.json,
/// relative paths resolved against `base`.
HopfPtr resolve_hopf(const std::string& spec, const std::filesystem::path& base = {});

/// {"hopf": ..., "dim": n, "action": {"<label>": matrix}}; the unit action is
/// implied when the unit is a basis element.
HModule module_from_json(const Json& j, const std::filesystem::path& base = {});
Json module_to_json(const HModule& m, const std::string& hopf_name);

/// {"hopf", "objects", "morphisms": [{"label", "source", "target"}],
///  "identities": [label per object], "compose": [[i, j, k, c]],
///  "h_action": {"<label>": matrix}}. b_i o b_j = sum c b_k.
CategoryPtr category_from_json(const Json& j, const std::filesystem::path& base = {});

/// {"hopf", "category": name or file, "object_grading": [dims],
///  "a_action": {"<morphism>": matrix}, "h_action": {"<label>": matrix}}.
/// Identity morphisms act as the block projections given by the grading.
EquivariantModule eqmod_from_json(const Json& j, const std::filesystem::path& base = {});

/// Short names for H-modules: k, H, quotient (H/(lambda)), kernel (Ker eps),
/// J<k> (Jordan block, divided powers), chi<i> (i-th character),
/// sigma<n> (Sigma^n k, n may be negative), cone:<name>; or a module.json path.
HModule resolve_hmodule(const HopfPtr& hopf, const std::string& spec, const std::filesystem::path& base = {});

/// Category shorthand (k, truncpoly:n[:trivial], a2quiver) or hmodcat.json.
CategoryPtr resolve_category(const HopfPtr& hopf, const std::string& spec, const std::filesystem::path& base = {});

/// Equivariant module names: A (the unit module), free<r>, C:<module>,
/// E:<module>, A*<hmodule> (A tensor an H-module); for A = k every H-module
/// name. Also eqmod.json paths. Here <module> is regular or trunc<j> / x<p>y<q>
/// A-module shorthand resolved against the category.
EquivariantModule resolve_equivariant(const SmashPtr& smash, const std::string& spec,
                                      const std::filesystem::path& base = {});

}  // namespace hopfo
