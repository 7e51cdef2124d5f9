// Built-in catalogs, verification suites, computation commands and report
// emission behind the hopfo command-line tool.
#pragma once

#include "hopfo/cotorsion.hpp"
#include "hopfo/io.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hopfo {

struct RunConfig {
  int window = 3;
  std::uint64_t seed = 0;
  std::optional<std::string> hopf;
  std::optional<std::string> a;
  unsigned threads = 1;
  std::filesystem::path base;
};

/// HOPFO_THREADS if set and positive, otherwise the hardware concurrency.
unsigned threads_from_env();

struct Check {
  std::string key;
  bool pass = true;
  /// Enough data to replay the check (pair, modules, sample index, maps).
  Json witness;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  int window = 3;
  Json inputs = Json::object();
  std::vector<Check> checks;
  /// Counters (e.g. samples per pair) and, for compute, the result.
  Json summary = Json::object();
  std::vector<std::string> warnings;
  bool ok() const;
  std::size_t failures() const;
  Json to_json() const;
  std::string to_table() const;
};

/// The Hopf algebras of the built-in catalog.
const std::vector<std::string>& catalog_hopf_names();
/// (A, H) pairs used by the equivariant suites when none is selected.
const std::vector<std::pair<std::string, std::string>>& default_pairs();

/// Small H-modules with names understood by resolve_hmodule or built from them.
std::vector<std::pair<std::string, HModule>> hmodule_catalog(const HopfPtr& h);
/// A-modules used for C(N) and E(N).
std::vector<std::pair<std::string, Representation>> a_module_catalog(const CategoryPtr& cat);
/// At least 12 equivariant modules: for A = k the H-module catalog, otherwise
/// A, A#H, C(N), E(N) and A (x) V.
std::vector<NamedModule> equivariant_module_catalog(const SmashPtr& smash);
SmashPtr make_smash(const HopfPtr& h, const std::string& category_spec, const std::filesystem::path& base = {});

const std::vector<std::string>& suite_names();
/// Throws InputError for an unknown suite name.
Report run_suite(const std::string& name, const RunConfig& config);

struct ComputeArgs {
  std::optional<std::string> module;
  std::optional<std::string> m;
  std::optional<std::string> n;
  int shift = 1;
};
const std::vector<std::string>& compute_names();
Report run_compute(const std::string& what, const ComputeArgs& args, const RunConfig& config);

/// Validates one JSON file of any supported kind (hopf, module, hmodcat,
/// eqmod, detected from its fields). The check's witness carries the kind and
/// the diagnostic. Throws InputError for unreadable or malformed files.
Check validate_file(const std::filesystem::path& path);

}  // namespace hopfo
