#include "hopfo/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace hopfo {

namespace fs = std::filesystem;

namespace {

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw InputError(where + ": expected a nonnegative index");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

Field field_from_json(const Json& j) {
  std::string kind = string_from_json(field_of(j, "kind", "field"), "field.kind");
  if (kind == "rational") return Field::rationals();
  if (kind != "prime") throw InputError("field.kind: expected \"prime\" or \"rational\", got \"" + kind + "\"");
  const Json& p = field_of(j, "p", "field");
  if (!p.is_number_integer() || p.get<std::int64_t>() < 2) throw InputError("field.p: expected an integer >= 2");
  try {
    return Field::prime(p.get<std::uint64_t>());
  } catch (const ValidationError& e) {
    throw InputError(std::string("field.p: ") + e.what());
  }
}

Json field_to_json(const Field& f) {
  Json j;
  if (f.is_prime()) {
    j["kind"] = "prime";
    j["p"] = f.characteristic();
  } else {
    j["kind"] = "rational";
  }
  return j;
}

std::vector<StructureTerm> terms_from_json(const Field& f, const Json& j, const std::string& where, std::size_t dim) {
  if (!j.is_array()) throw InputError(where + ": expected a list of [i, j, k, c]");
  std::vector<StructureTerm> out;
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string at = where + "[" + std::to_string(t) + "]";
    if (!j[t].is_array() || j[t].size() != 4) throw InputError(at + ": expected [i, j, k, c]");
    StructureTerm term{index_from_json(j[t][0], at), index_from_json(j[t][1], at), index_from_json(j[t][2], at),
                       scalar_from_json(f, j[t][3], at)};
    if (term.i >= dim || term.j >= dim || term.k >= dim) throw InputError(at + ": index out of range");
    out.push_back(term);
  }
  return out;
}

Json terms_to_json(std::vector<StructureTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const StructureTerm& a, const StructureTerm& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  // Merge repeated index triples.
  std::vector<StructureTerm> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j && merged.back().k == t.k)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  Json out = Json::array();
  for (const auto& t : merged)
    if (!t.coeff.is_zero()) out.push_back(Json::array({t.i, t.j, t.k, scalar_to_json(t.coeff)}));
  return out;
}

std::vector<Matrix> labelled_actions(const Field& f, const Json& j, const std::vector<std::string>& labels,
                                     std::size_t dim, const Matrix& unit, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object keyed by basis label");
  std::optional<std::size_t> unit_index;
  for (std::size_t i = 0; i < unit.rows(); ++i) {
    if (unit.at(i, 0).is_zero()) continue;
    if (unit_index || !unit.at(i, 0).is_one()) {
      unit_index.reset();
      break;
    }
    unit_index = i;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(labels.begin(), labels.end(), it.key()) == labels.end())
      throw InputError(where + ": unknown basis label '" + it.key() + "'");
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = j.find(labels[i]);
    if (it == j.end()) {
      if (unit_index == i) {
        out.push_back(Matrix::identity(f, dim));
        continue;
      }
      throw InputError(where + ": missing action of '" + labels[i] + "'");
    }
    Matrix m = matrix_from_json(f, *it, where + "." + labels[i]);
    if (m.rows() != dim || m.cols() != dim)
      throw InputError(where + "." + labels[i] + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) +
                       " matrix");
    out.push_back(std::move(m));
  }
  return out;
}

fs::path resolve_path(const std::string& spec, const fs::path& base) {
  fs::path p(spec);
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

bool looks_like_file(const std::string& spec) {
  return spec.size() > 5 && spec.substr(spec.size() - 5) == ".json";
}

std::optional<long> parse_integer(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  try {
    long v = std::stol(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

// A-module shorthand used inside C:<...> and E:<...>.
Representation resolve_a_module(const CategoryPtr& cat, const std::string& spec) {
  const Field& f = cat->field();
  if (spec == "regular") return regular_representation(cat->algebra());
  if (spec.rfind("trunc", 0) == 0 && cat->name().rfind("truncpoly", 0) == 0) {
    auto j = parse_integer(spec.substr(5));
    if (!j || *j < 1 || static_cast<std::size_t>(*j) > cat->dim())
      throw InputError("trunc<j> needs 1 <= j <= " + std::to_string(cat->dim()));
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < cat->dim(); ++i) {
      Matrix a(f, *j, *j);
      for (long r = 0; r + static_cast<long>(i) < *j; ++r) a.set(r + i, r, 1);
      action.push_back(std::move(a));
    }
    return validated_representation(cat->algebra(), *j, std::move(action));
  }
  if (spec.rfind("quiver:", 0) == 0 && cat->name() == "a2quiver") {
    auto parts = split(spec, ':');
    if (parts.size() != 4) throw InputError("quiver:<dim x>:<dim y>:<rank>");
    auto p = parse_integer(parts[1]), q = parse_integer(parts[2]), r = parse_integer(parts[3]);
    if (!p || !q || !r || *p < 0 || *q < 0 || *r < 0 || *r > std::min(*p, *q))
      throw InputError("quiver:<dim x>:<dim y>:<rank> with rank <= both dims");
    const std::size_t d = *p + *q;
    Matrix ex(f, d, d), ey(f, d, d), a(f, d, d);
    for (long i = 0; i < *p; ++i) ex.set(i, i, 1);
    for (long i = 0; i < *q; ++i) ey.set(*p + i, *p + i, 1);
    for (long i = 0; i < *r; ++i) a.set(*p + i, i, 1);
    return validated_representation(cat->algebra(), d, {ex, ey, a});
  }
  throw InputError("unknown A-module '" + spec + "' for category " + cat->name() +
                   " (expected regular, trunc<j> or quiver:<p>:<q>:<r>)");
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(f, j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_scalar(f, j.get<std::string>());
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or an \"a/b\" string");
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  Rational r = s.rational();
  if (denominator(r) == 1 && abs(numerator(r)) < BigInt(1) << 53) return static_cast<std::int64_t>(numerator(r));
  return s.to_string();
}

Matrix matrix_from_json(const Field& f, const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError(where + ": row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, scalar_from_json(f, j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json vector_to_json(const Matrix& v) {
  Json out = Json::array();
  for (std::size_t r = 0; r < v.rows(); ++r) out.push_back(scalar_to_json(v.at(r, 0)));
  return out;
}

RawHopf raw_hopf_from_json(const Json& j) {
  RawHopf raw;
  raw.field = field_from_json(field_of(j, "field", "hopf"));
  const Field& f = raw.field;
  const std::size_t dim = index_from_json(field_of(j, "dim", "hopf"), "dim");
  const Json& basis = field_of(j, "basis", "hopf");
  if (!basis.is_array() || basis.size() != dim) throw InputError("basis: expected " + std::to_string(dim) + " labels");
  for (std::size_t i = 0; i < dim; ++i) raw.basis.push_back(string_from_json(basis[i], "basis"));
  const Json& unit = field_of(j, "unit", "hopf");
  if (!unit.is_array() || unit.size() != dim) throw InputError("unit: expected " + std::to_string(dim) + " entries");
  raw.unit = Matrix(f, dim, 1);
  for (std::size_t i = 0; i < dim; ++i) raw.unit.set(i, 0, scalar_from_json(f, unit[i], "unit"));
  raw.mult = terms_from_json(f, field_of(j, "mult", "hopf"), "mult", dim);
  raw.comult = terms_from_json(f, field_of(j, "comult", "hopf"), "comult", dim);
  const Json& counit = field_of(j, "counit", "hopf");
  if (!counit.is_array() || counit.size() != dim) throw InputError("counit: expected " + std::to_string(dim) + " entries");
  for (std::size_t i = 0; i < dim; ++i) raw.counit.push_back(scalar_from_json(f, counit[i], "counit"));
  raw.antipode = matrix_from_json(f, field_of(j, "antipode", "hopf"), "antipode");
  if (raw.antipode.rows() != dim || raw.antipode.cols() != dim)
    throw InputError("antipode: expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  return raw;
}

Json hopf_to_json(const HopfAlgebra& h) {
  const RawHopf& raw = h.raw();
  Json j;
  j["field"] = field_to_json(h.field());
  j["dim"] = h.dim();
  j["basis"] = raw.basis;
  j["unit"] = vector_to_json(raw.unit);
  j["mult"] = terms_to_json(raw.mult);
  j["comult"] = terms_to_json(raw.comult);
  Json counit = Json::array();
  for (const auto& c : raw.counit) counit.push_back(scalar_to_json(c));
  j["counit"] = counit;
  j["antipode"] = matrix_to_json(raw.antipode);
  return j;
}

HopfPtr resolve_hopf(const std::string& spec, const fs::path& base) {
  if (looks_like_file(spec)) {
    fs::path p = resolve_path(spec, base);
    return validate_hopf(raw_hopf_from_json(read_json_file(p)));
  }
  return catalog_hopf(spec);
}

HModule module_from_json(const Json& j, const fs::path& base) {
  HopfPtr h = resolve_hopf(string_from_json(field_of(j, "hopf", "module"), "module.hopf"), base);
  const std::size_t dim = index_from_json(field_of(j, "dim", "module"), "module.dim");
  return validate_module(h, labelled_actions(h->field(), field_of(j, "action", "module"), h->labels(), dim, h->unit(),
                                             "action"));
}

Json module_to_json(const HModule& m, const std::string& hopf_name) {
  Json j;
  j["hopf"] = hopf_name;
  j["dim"] = m.dim();
  Json action = Json::object();
  const auto& labels = m.hopf()->labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (m.hopf()->unit() == m.hopf()->basis_vector(i)) continue;
    action[labels[i]] = matrix_to_json(m.action(i));
  }
  j["action"] = action;
  return j;
}

CategoryPtr category_from_json(const Json& j, const fs::path& base) {
  HopfPtr h = resolve_hopf(string_from_json(field_of(j, "hopf", "category"), "category.hopf"), base);
  const Field& f = h->field();
  RawCategory raw;
  raw.name = j.contains("name") ? string_from_json(j["name"], "category.name") : std::string("custom");
  const Json& objects = field_of(j, "objects", "category");
  if (!objects.is_array() || objects.empty()) throw InputError("objects: expected a nonempty list of names");
  std::map<std::string, std::size_t> object_index;
  for (const auto& o : objects) {
    raw.objects.push_back(string_from_json(o, "objects"));
    object_index[raw.objects.back()] = raw.objects.size() - 1;
  }
  auto object_of = [&](const Json& o, const std::string& where) {
    auto it = object_index.find(string_from_json(o, where));
    if (it == object_index.end()) throw InputError(where + ": unknown object '" + o.get<std::string>() + "'");
    return it->second;
  };
  const Json& morphisms = field_of(j, "morphisms", "category");
  if (!morphisms.is_array()) throw InputError("morphisms: expected a list");
  std::map<std::string, std::size_t> morphism_index;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    std::string at = "morphisms[" + std::to_string(i) + "]";
    raw.basis.push_back(string_from_json(field_of(morphisms[i], "label", at), at + ".label"));
    raw.source.push_back(object_of(field_of(morphisms[i], "source", at), at + ".source"));
    raw.target.push_back(object_of(field_of(morphisms[i], "target", at), at + ".target"));
    morphism_index[raw.basis.back()] = i;
  }
  const Json& ids = field_of(j, "identities", "category");
  if (!ids.is_array() || ids.size() != raw.objects.size())
    throw InputError("identities: expected one morphism label per object");
  for (const auto& id : ids) {
    auto it = morphism_index.find(string_from_json(id, "identities"));
    if (it == morphism_index.end()) throw InputError("identities: unknown morphism '" + id.get<std::string>() + "'");
    raw.identities.push_back(it->second);
  }
  raw.compose = terms_from_json(f, field_of(j, "compose", "category"), "compose", raw.basis.size());
  Matrix unit = h->unit();
  raw.h_action =
      labelled_actions(f, field_of(j, "h_action", "category"), h->labels(), raw.basis.size(), unit, "h_action");
  return HModuleCategory::validate(h, raw);
}

EquivariantModule eqmod_from_json(const Json& j, const fs::path& base) {
  HopfPtr h = resolve_hopf(string_from_json(field_of(j, "hopf", "eqmod"), "eqmod.hopf"), base);
  const Field& f = h->field();
  CategoryPtr cat = resolve_category(h, string_from_json(field_of(j, "category", "eqmod"), "eqmod.category"), base);
  SmashPtr smash = cat->name() == "k" ? unit_smash(h) : SmashAlgebra::create(cat);
  const Json& grading = field_of(j, "object_grading", "eqmod");
  if (!grading.is_array() || grading.size() != cat->object_count())
    throw InputError("object_grading: expected one dimension per object");
  std::vector<std::size_t> offsets{0};
  for (const auto& g : grading) offsets.push_back(offsets.back() + index_from_json(g, "object_grading"));
  const std::size_t dim = offsets.back();
  const Json& a = field_of(j, "a_action", "eqmod");
  if (!a.is_object()) throw InputError("a_action: expected an object keyed by morphism label");
  std::vector<Matrix> a_action;
  for (std::size_t i = 0; i < cat->dim(); ++i) {
    const std::string& label = cat->raw().basis[i];
    auto id = std::find(cat->raw().identities.begin(), cat->raw().identities.end(), i);
    auto it = a.find(label);
    if (it != a.end()) {
      Matrix m = matrix_from_json(f, *it, "a_action." + label);
      if (m.rows() != dim || m.cols() != dim) throw InputError("a_action." + label + ": wrong size");
      a_action.push_back(std::move(m));
    } else if (id != cat->raw().identities.end()) {
      std::size_t x = id - cat->raw().identities.begin();
      Matrix e(f, dim, dim);
      for (std::size_t r = offsets[x]; r < offsets[x + 1]; ++r) e.set(r, r, 1);
      a_action.push_back(std::move(e));
    } else {
      throw InputError("a_action: missing action of '" + label + "'");
    }
  }
  std::vector<Matrix> h_action = labelled_actions(f, field_of(j, "h_action", "eqmod"), h->labels(), dim, h->unit(),
                                                  "h_action");
  EquivariantModule m = make_equivariant(smash, std::move(a_action), std::move(h_action));
  std::vector<std::size_t> expected(offsets.size() - 1);
  for (std::size_t x = 0; x + 1 < offsets.size(); ++x) expected[x] = offsets[x + 1] - offsets[x];
  if (m.object_grading() != expected) throw ValidationError("object_grading does not match the identity actions");
  return m;
}

HModule resolve_hmodule(const HopfPtr& hopf, const std::string& spec, const fs::path& base) {
  if (looks_like_file(spec)) {
    fs::path file = resolve_path(spec, base);
    HModule m = module_from_json(read_json_file(file), file.parent_path());
    if (m.hopf()->raw().basis != hopf->raw().basis || !(m.field() == hopf->field()))
      throw InputError(spec + ": module is over a different Hopf algebra");
    return validate_module(hopf, m.actions());
  }
  if (spec == "k") return trivial_module(hopf);
  if (spec == "H" || spec == "regular") return regular_module(hopf);
  if (spec == "quotient") return quotient_by_integral(hopf).module;
  if (spec == "kernel") return counit_kernel_module(hopf).module;
  if (spec.rfind("cone:", 0) == 0) return cone(resolve_hmodule(hopf, spec.substr(5), base));
  if (spec.size() > 1 && spec[0] == 'J') {
    auto k = parse_integer(spec.substr(1));
    if (!k || *k < 1 || static_cast<std::size_t>(*k) > hopf->dim())
      throw InputError("J<k> needs 1 <= k <= " + std::to_string(hopf->dim()));
    return jordan_module(hopf, *k);
  }
  if (spec.rfind("chi", 0) == 0) {
    auto i = parse_integer(spec.substr(3));
    if (!i || *i < 0 || static_cast<std::size_t>(*i) >= hopf->characters().size())
      throw InputError("chi<i> needs 0 <= i < " + std::to_string(hopf->characters().size()));
    return character_module(hopf, *i);
  }
  if (spec.rfind("sigma", 0) == 0) {
    auto n = parse_integer(spec.substr(5));
    if (!n || *n < -4 || *n > 4) throw InputError("sigma<n> needs -4 <= n <= 4");
    return suspend_n(trivial_module(hopf), static_cast<int>(*n));
  }
  throw InputError("unknown module '" + spec +
                   "' (expected k, H, quotient, kernel, J<k>, chi<i>, sigma<n>, cone:<name> or a .json file)");
}

CategoryPtr resolve_category(const HopfPtr& hopf, const std::string& spec, const fs::path& base) {
  if (looks_like_file(spec)) {
    fs::path file = resolve_path(spec, base);
    CategoryPtr c = category_from_json(read_json_file(file), file.parent_path());
    if (c->hopf()->raw().basis != hopf->raw().basis || !(c->field() == hopf->field()))
      throw InputError(spec + ": category is over a different Hopf algebra");
    RawCategory raw = c->raw();
    return HModuleCategory::validate(hopf, raw);
  }
  return catalog_category(hopf, spec);
}

EquivariantModule resolve_equivariant(const SmashPtr& smash, const std::string& spec, const fs::path& base) {
  const CategoryPtr& cat = smash->base();
  if (looks_like_file(spec)) {
    fs::path file = resolve_path(spec, base);
    EquivariantModule m = eqmod_from_json(read_json_file(file), file.parent_path());
    if (m.smash()->dim() != smash->dim() || m.category()->dim() != cat->dim())
      throw InputError(spec + ": module is over a different smash product");
    return from_smash_module(smash, m.rep().actions());
  }
  if (spec == "A") return category_module(smash);
  if (spec.rfind("free", 0) == 0) {
    auto r = parse_integer(spec.size() == 4 ? "1" : spec.substr(4));
    if (!r || *r < 0 || *r > 4) throw InputError("free<r> needs 0 <= r <= 4");
    return free_equivariant(smash, *r);
  }
  if (spec.rfind("C:", 0) == 0) return cone_adjoint_C(smash, resolve_a_module(cat, spec.substr(2)));
  if (spec.rfind("E:", 0) == 0) return E_functor(smash, resolve_a_module(cat, spec.substr(2)));
  if (spec.rfind("A*", 0) == 0)
    return tensor_with_hmodule(category_module(smash), resolve_hmodule(smash->hopf(), spec.substr(2), base));
  if (cat->name() == "k") return from_hmodule(resolve_hmodule(smash->hopf(), spec, base));
  throw InputError("unknown equivariant module '" + spec +
                   "' (expected A, free<r>, C:<A-module>, E:<A-module>, A*<H-module> or a .json file)");
}

}  // namespace hopfo
