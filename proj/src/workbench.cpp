#include "hopfo/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace hopfo {

namespace fs = std::filesystem;

namespace {

// Runs task(i) for i < count on up to `threads` workers; results keep index
// order and the first exception (by index) is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t count, unsigned threads, const std::function<R(std::size_t)>& task) {
  std::vector<std::optional<R>> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> result;
  for (auto& r : out) result.push_back(std::move(*r));
  return result;
}

// FNV-1a, so seeds do not depend on the standard library's std::hash.
std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) h = (h ^ c) * 16777619u;
  return h;
}

std::mt19937_64 rng_for(std::uint64_t seed, const std::string& suite, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), fnv1a(suite),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

std::string pad(std::size_t i) {
  std::ostringstream os;
  os << std::setw(3) << std::setfill('0') << i;
  return os.str();
}

std::string pair_name(const std::pair<std::string, std::string>& pr) { return pr.first + "#" + pr.second; }

Matrix random_in(const Subspace& homs, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix out(homs.field(), rows, cols);
  std::uniform_int_distribution<int> val(-3, 3);
  for (std::size_t i = 0; i < homs.dim(); ++i)
    out.add_scaled(Scalar(homs.field(), val(rng)), hom_basis_matrix(homs, i, rows, cols));
  return out;
}

Check check(std::string key, bool pass, Json witness = Json::object()) {
  return Check{std::move(key), pass, std::move(witness)};
}

struct PairResult {
  std::vector<Check> checks;
  Json summary = Json::object();
  std::vector<std::string> warnings;
};

std::vector<std::string> selected_hopfs(const RunConfig& c) {
  if (c.hopf) return {*c.hopf};
  return catalog_hopf_names();
}

std::vector<std::pair<std::string, std::string>> selected_pairs(const RunConfig& c) {
  if (c.hopf || c.a) {
    if (c.hopf) return {{c.a.value_or("k"), *c.hopf}};
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& pr : default_pairs())
      if (pr.first == *c.a) out.push_back(pr);
    if (out.empty()) out.push_back({*c.a, "divided_power:2"});
    return out;
  }
  return default_pairs();
}

// Runs a per-item task in parallel and merges the results into the report.
void merge(Report& r, std::vector<PairResult> results, const std::vector<std::string>& labels) {
  Json per = Json::object();
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (auto& c : results[i].checks) {
      c.key = labels[i] + "/" + c.key;
      r.checks.push_back(std::move(c));
    }
    for (auto& w : results[i].warnings) r.warnings.push_back(labels[i] + ": " + w);
    per[labels[i]] = results[i].summary;
  }
  r.summary["per_input"] = per;
}

HModule literal_or_stable_suspension(const HModule& m, int n, std::size_t limit, bool* literal) {
  std::size_t d = m.dim();
  for (int i = 0; i < std::abs(n); ++i) d *= m.hopf()->dim() - 1;
  *literal = d <= limit;
  return *literal ? suspend_n(m, n) : stable_suspend(m, n);
}

Json module_dims(const std::vector<NamedModule>& cat) {
  Json j = Json::object();
  for (const auto& nm : cat) j[nm.name] = nm.module.dim();
  return j;
}

// ---- suites ---------------------------------------------------------------

PairResult hopf_axioms(const std::string& name, const RunConfig& cfg) {
  PairResult r;
  HopfPtr h = resolve_hopf(name, cfg.base);
  const Field& f = h->field();
  r.checks.push_back(check("validate", true, {{"dim", h->dim()}, {"semisimple", h->is_semisimple()}}));
  // Left integrals: h x = eps(h) x for every basis element h.
  std::vector<Matrix> rows;
  for (std::size_t i = 0; i < h->dim(); ++i)
    rows.push_back(h->algebra()->left_mult(i) - Matrix::identity(f, h->dim()).scaled(h->counit(i)));
  Subspace integrals = kernel(vstack(rows));
  r.checks.push_back(check("integral-space", integrals.dim() == 1,
                           {{"dim", integrals.dim()}, {"lambda", vector_to_json(h->left_integral())}}));
  if (h->family() == "divided_power") {
    const std::size_t p = h->dim();
    Matrix expected = h->basis_vector(p - 1);
    r.checks.push_back(check("integral-is-top-power", h->left_integral() == expected,
                             {{"lambda", vector_to_json(h->left_integral())}}));
  }
  r.checks.push_back(check("antipode-invertible", (h->antipode() * h->antipode_inverse()).is_identity()));
  Json j = hopf_to_json(*h);
  HopfPtr back = validate_hopf(raw_hopf_from_json(j));
  r.checks.push_back(check("json-round-trip", hopf_to_json(*back) == j));
  r.summary = {{"dim", h->dim()}, {"semisimple", h->is_semisimple()}, {"integral_dim", integrals.dim()}};
  return r;
}

PairResult homology_basics(const std::string& name, const RunConfig& cfg) {
  PairResult r;
  HopfPtr h = resolve_hopf(name, cfg.base);
  std::size_t regular = homology(regular_module(h)).dim;
  r.checks.push_back(check("regular-acyclic", regular == 0, {{"dim", regular}, {"semisimple", h->is_semisimple()}}));
  if (h->family() == "divided_power") {
    const std::size_t p = h->dim();
    for (std::size_t k = 1; k <= p; ++k) {
      std::size_t d = homology(jordan_module(h, k)).dim;
      r.checks.push_back(check("jordan-homology/J" + std::to_string(k), d == (k < p ? 1u : 0u), {{"dim", d}}));
    }
    if (p == 3) {
      HModule t = tensor(jordan_module(h, 2), jordan_module(h, 2));
      auto type = jordan_decompose(t);
      bool iso = find_isomorphism(t, direct_sum(jordan_module(h, 1), jordan_module(h, 3))).has_value();
      r.checks.push_back(check("J2xJ2=J1+J3", iso && type == std::vector<std::size_t>{3, 1}, {{"jordan_type", type}}));
    }
  }
  const Field& f = h->field();
  const Matrix& lambda = h->left_integral();
  std::size_t switching = 0;
  for (const auto& [vname, v] : hmodule_catalog(h)) {
    bool ok = true;
    std::string why;
    try {
      Matrix s = switching_iso(v);
      HModule reg = regular_module(h);
      ok = rank(s) == s.rows() && s.rows() == s.cols();
      if (!ok) why = "not invertible";
      for (std::size_t i = 0; ok && i < h->dim(); ++i) {
        Matrix b = h->basis_vector(i);
        if (!(s * tensor_action(v, reg, b) == tensor_action(reg, v, b) * s)) {
          ok = false;
          why = "not equivariant at basis index " + std::to_string(i);
        }
      }
      if (ok && !(s * kronecker(Matrix::identity(f, v.dim()), lambda) ==
                  kronecker(lambda, Matrix::identity(f, v.dim())))) {
        ok = false;
        why = "square fails: r(v x lambda) != lambda x v";
      }
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    ++switching;
    Json w = {{"module", vname}, {"dim", v.dim()}};
    if (!ok) w["reason"] = why;
    r.checks.push_back(check("switching-iso/" + vname, ok, w));
  }
  r.summary = {{"regular_homology", regular}, {"switching_checked", switching}};
  return r;
}

PairResult stablehom_agreement(std::size_t index, const std::pair<std::string, std::string>& pr,
                               const RunConfig& cfg) {
  PairResult r;
  auto rng = rng_for(cfg.seed, "stablehom-agreement", index);
  SmashPtr s = make_smash(resolve_hopf(pr.second, cfg.base), pr.first, cfg.base);
  auto cat = equivariant_module_catalog(s);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = 0; b < cat.size(); ++b)
      if (cat[a].module.dim() * cat[b].module.dim() <= 256) pairs.push_back({a, b});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  if (pairs.size() > 24) pairs.resize(24);
  std::sort(pairs.begin(), pairs.end());
  std::size_t nonzero = 0;
  for (const auto& [a, b] : pairs) {
    Json w = {{"m", cat[a].name}, {"n", cat[b].name}};
    bool ok = true;
    try {
      StableHomData d = stable_hom(cat[a].module, cat[b].module);
      w["homotopy_quotient_dim"] = d.dim;
      w["hom_space_homology_dim"] = d.homology_dim;
      ok = d.dim == d.homology_dim;
      nonzero += d.dim > 0;
    } catch (const InternalError& e) {
      ok = false;
      w["reason"] = e.what();
    }
    r.checks.push_back(check(cat[a].name + "->" + cat[b].name, ok, w));
  }
  r.summary = {{"module_pairs", pairs.size()}, {"nonzero", nonzero}, {"catalog", module_dims(cat)}};
  return r;
}

PairResult cone_lemmas_hopf(const std::string& name, const RunConfig& cfg) {
  PairResult r;
  HopfPtr h = resolve_hopf(name, cfg.base);
  const int w = cfg.window;
  std::size_t literal_count = 0, stable_count = 0;
  for (const auto& [mname, m] : hmodule_catalog(h)) {
    HModule c = cone(m);
    bool acyclic = true;
    Json dims = Json::array();
    for (int n = -w; n <= w; ++n) {
      bool literal = false;
      std::size_t d = homology(literal_or_stable_suspension(c, n, 200, &literal)).dim;
      (literal ? literal_count : stable_count)++;
      dims.push_back(d);
      acyclic = acyclic && d == 0;
    }
    r.checks.push_back(check("cone-acyclic/" + mname, acyclic, {{"homology_dims", dims}}));
    if (m.dim() * (h->dim() - 1) * (h->dim() - 1) > 256) continue;
    HModule round = suspend(desuspend(m));
    bool same = true;
    Json lhs = Json::array(), rhs = Json::array();
    for (int n = -w; n <= w; ++n) {
      std::size_t a = homology(stable_suspend(round, n)).dim, b = homology(stable_suspend(m, n)).dim;
      lhs.push_back(a);
      rhs.push_back(b);
      same = same && a == b;
    }
    r.checks.push_back(check("suspend-desuspend/" + mname, same, {{"lhs", lhs}, {"rhs", rhs}}));
  }
  HModule kq = tensor(counit_kernel_module(h).module, quotient_by_integral(h).module);
  DecompositionReport d = split_off_trivials(kq);
  bool proj = is_projective(d.complement);
  r.checks.push_back(check("kernel-x-quotient", d.trivial_multiplicity == 1 && proj,
                           {{"multiplicity", d.trivial_multiplicity},
                            {"complement_dim", d.complement.dim()},
                            {"complement_projective", proj}}));
  r.summary = {{"literal_suspensions", literal_count}, {"stable_suspensions", stable_count}};
  return r;
}

PairResult cone_lemmas_pair(std::size_t, const std::pair<std::string, std::string>& pr, const RunConfig& cfg) {
  PairResult r;
  SmashPtr s = make_smash(resolve_hopf(pr.second, cfg.base), pr.first, cfg.base);
  for (const auto& nm : equivariant_module_catalog(s)) {
    bool ok = is_sigma_acyclic(cone(nm.module), cfg.window);
    r.checks.push_back(check("equivariant-cone-acyclic/" + nm.name, ok));
  }
  return r;
}

PairResult adjunctions(std::size_t index, const std::pair<std::string, std::string>& pr, const RunConfig& cfg) {
  PairResult r;
  auto rng = rng_for(cfg.seed, "adjunctions", index);
  SmashPtr s = make_smash(resolve_hopf(pr.second, cfg.base), pr.first, cfg.base);
  auto cat = equivariant_module_catalog(s);
  auto targets = a_module_catalog(s->base());
  std::size_t phi_psi = 0, psi_phi = 0, phi_psi_fail = 0, psi_phi_fail = 0;
  std::vector<std::string> failures;
  for (std::size_t round = 0; phi_psi < 50 || psi_phi < 50; ++round) {
    if (round > 40) break;
    for (const auto& nm : cat) {
      if (nm.module.dim() > 12) continue;
      for (const auto& [nname, n] : targets) {
        EquivariantModule en = E_functor(s, n);
        Matrix f = random_in(intertwiners(nm.module.forget(), n), n.dim(), nm.module.dim(), rng);
        ++phi_psi;
        if (!(adjunction_psi(nm.module, n, adjunction_phi(nm.module, n, f)) == f)) {
          ++phi_psi_fail;
          failures.push_back("psi(phi(f)) != f for " + nm.name + " -> " + nname + " round " + std::to_string(round));
        }
        Matrix g = random_in(equivariant_homs(nm.module, en), en.dim(), nm.module.dim(), rng);
        ++psi_phi;
        if (!(adjunction_phi(nm.module, n, adjunction_psi(nm.module, n, g)) == g)) {
          ++psi_phi_fail;
          failures.push_back("phi(psi(g)) != g for " + nm.name + " -> E(" + nname + ") round " + std::to_string(round));
        }
      }
    }
  }
  r.checks.push_back(check("psi-phi-identity", phi_psi_fail == 0 && phi_psi >= 50,
                           {{"maps", phi_psi}, {"failures", phi_psi_fail}}));
  r.checks.push_back(check("phi-psi-identity", psi_phi_fail == 0 && psi_phi >= 50,
                           {{"maps", psi_phi}, {"failures", psi_phi_fail}, {"first", failures}}));
  // E(N) for the A-modules and for U(M) of small catalog members.
  std::vector<std::pair<std::string, Representation>> sources = targets;
  for (const auto& nm : cat)
    if (nm.module.dim() <= 6) sources.push_back({"U(" + nm.name + ")", nm.module.forget()});
  for (const auto& [nname, n] : sources) {
    EquivariantModule e = E_functor(s, n);
    HomologyData hd = homology(e.as_hmodule());
    bool acyclic = is_sigma_acyclic(e, cfg.window);
    bool ok = acyclic && hd.cycles.dim() == n.dim() && hd.boundaries.dim() == n.dim();
    r.checks.push_back(check("E-acyclic/" + nname, ok,
                             {{"dim_N", n.dim()},
                              {"dim_Z", hd.cycles.dim()},
                              {"dim_B", hd.boundaries.dim()},
                              {"sigma_acyclic", acyclic}}));
  }
  r.summary = {{"psi_phi_maps", phi_psi}, {"phi_psi_maps", psi_phi}, {"E_modules", sources.size()}};
  return r;
}

PairResult a_split_lemmas(std::size_t index, const std::pair<std::string, std::string>& pr, const RunConfig& cfg) {
  PairResult r;
  auto rng = rng_for(cfg.seed, "a-split-lemmas", index);
  SmashPtr s = make_smash(resolve_hopf(pr.second, cfg.base), pr.first, cfg.base);
  auto cat = equivariant_module_catalog(s);
  const std::size_t dh = s->hopf()->dim();

  // 0 -> M -> E -> Z (x) H -> 0, A-split, always splits.
  std::size_t cone_quotients = 0, nonzero_cocycles = 0;
  for (std::size_t round = 0; cone_quotients < 24 && round < 8; ++round) {
    for (std::size_t a = 0; a < cat.size() && cone_quotients < 24; ++a) {
      const auto& z = cat[(a + round) % cat.size()];
      const auto& m = cat[a];
      if (m.module.dim() * z.module.dim() * dh > 160) continue;
      EquivariantModule c = cone(z.module);
      Subspace space = a_split_cocycle_space(m.module, c);
      Matrix theta = random_a_split_cocycle(space, rng);
      ExtensionData e = extension_from_a_split_cocycle(m.module, c, theta);
      nonzero_cocycles += !theta.is_zero();
      bool ok = e.is_exact && e.is_A_split() && e.is_split();
      Json w = {{"sub", m.name}, {"quotient", "C(" + z.name + ")"}, {"cocycle_space_dim", space.dim()}};
      if (!ok) w["cocycle"] = vector_to_json(theta);
      r.checks.push_back(check("cone-quotient-splits/" + pad(cone_quotients), ok, w));
      ++cone_quotients;
    }
  }

  // f ~ 0 iff the triangle of f splits.
  std::size_t maps = 0, homotopic = 0;
  std::size_t disagreements = 0;
  Json first_disagreement;
  for (std::size_t round = 0; maps < 50 && round < 20; ++round) {
    for (std::size_t a = 0; a < cat.size() && maps < 50; ++a) {
      const auto& m = cat[a];
      const auto& n = cat[(a * 5 + round + 1) % cat.size()];
      if (m.module.dim() * n.module.dim() > 144) continue;
      Subspace homs = equivariant_homs(m.module, n.module);
      Matrix f = random_in(homs, n.module.dim(), m.module.dim(), rng);
      // Every third sample is null-homotopic by construction.
      if (maps % 3 == 2) {
        EquivariantModule c = cone(m.module);
        f = random_in(equivariant_homs(c, n.module), n.module.dim(), c.dim(), rng) * cone_inclusion(m.module);
      }
      ConeSplittingVerdict v = null_homotopy_iff_cone_splits(f, m.module, n.module);
      homotopic += v.homotopy.has_value();
      if (!v.agree()) {
        if (disagreements++ == 0)
          first_disagreement = {{"m", m.name}, {"n", n.name}, {"map", matrix_to_json(f)},
                                {"homotopic", v.homotopy.has_value()}, {"cone_splits", v.cone_retraction.has_value()}};
      }
      ++maps;
    }
  }
  Json w = {{"maps", maps}, {"null_homotopic", homotopic}, {"disagreements", disagreements}};
  if (disagreements) w["first"] = first_disagreement;
  r.checks.push_back(check("null-homotopy-iff-cone-splits", disagreements == 0 && maps >= 50, w));

  // Long exact sequences of random A-split extensions.
  std::size_t les = 0, connecting = 0;
  for (std::size_t round = 0; les < 24 && round < 8; ++round) {
    for (std::size_t a = 0; a < cat.size() && les < 24; ++a) {
      const auto& l = cat[a];
      const auto& n = cat[(a + 2 * round + 1) % cat.size()];
      if (l.module.dim() * n.module.dim() > 48) continue;
      Subspace space = a_split_cocycle_space(l.module, n.module);
      Matrix theta = random_a_split_cocycle(space, rng);
      ExtensionData e = extension_from_a_split_cocycle(l.module, n.module, theta);
      LesVerdict v = long_exact_check(e, cfg.window);
      connecting += v.nonzero_connecting;
      Json lw = {{"sub", l.name}, {"quotient", n.name}, {"joints", v.joints_checked},
                 {"nonzero_connecting", v.nonzero_connecting}};
      if (!v.ok) {
        lw["failures"] = v.failures;
        lw["cocycle"] = vector_to_json(theta);
      }
      r.checks.push_back(check("les/" + pad(les), v.ok && e.is_A_split(), lw));
      ++les;
    }
  }
  r.summary = {{"cone_quotient_extensions", cone_quotients},
               {"nonzero_cocycles", nonzero_cocycles},
               {"cone_splitting_maps", maps},
               {"null_homotopic_maps", homotopic},
               {"les_extensions", les},
               {"nonzero_connecting", connecting}};
  return r;
}

PairResult hovey(std::size_t index, const std::pair<std::string, std::string>& pr, const RunConfig& cfg) {
  PairResult r;
  SmashPtr s = make_smash(resolve_hopf(pr.second, cfg.base), pr.first, cfg.base);
  auto cat = equivariant_module_catalog(s);
  HoveyReport h = hovey_triple_report(cat, cfg.window, cfg.seed + index);
  static const char* groups[] = {"a-orthogonality", "b-acyclic-cofibrant-projective", "c-projective-both",
                                 "d-ext-implies-stable-hom", "e-triv-thick"};
  for (int g = 0; g < 5; ++g) {
    std::vector<std::string> fails;
    std::string prefix = std::string("(") + static_cast<char>('a' + g) + ")";
    for (const auto& f : h.failures)
      if (f.rfind(prefix, 0) == 0) fails.push_back(f);
    r.checks.push_back(check(groups[g], fails.empty(), {{"checked", h.checked[g]}, {"failures", fails}}));
  }
  Json classes = Json::object();
  for (std::size_t i = 0; i < h.names.size(); ++i)
    classes[h.names[i]] = {{"sigma_acyclic", static_cast<bool>(h.sigma_acyclic[i])},
                           {"semiprojective", static_cast<bool>(h.semiprojective[i])},
                           {"projective", static_cast<bool>(h.projective[i])}};
  if (h.warning) r.warnings.push_back(*h.warning);
  r.summary = {{"catalog_size", cat.size()}, {"classes", classes},
               {"checked", Json::array({h.checked[0], h.checked[1], h.checked[2], h.checked[3], h.checked[4]})}};
  return r;
}

PairResult cntr_pair(std::size_t index, const std::pair<std::string, std::string>& pr, const RunConfig& cfg) {
  PairResult r;
  SmashPtr s = make_smash(resolve_hopf(pr.second, cfg.base), pr.first, cfg.base);
  auto cat = equivariant_module_catalog(s);
  std::vector<NamedModule> small;
  for (const auto& nm : cat)
    if (nm.module.dim() <= 12) small.push_back(nm);
  const std::size_t samples = 30;
  ContractiblePairReport c = contractible_pair_report(small, samples, cfg.seed + index);
  r.checks.push_back(check("extensions-by-contractibles-split", c.ok() && !c.contractible.empty(),
                           {{"contractible", c.contractible}, {"samples", c.samples}, {"split", c.split},
                            {"failures", c.failures}}));
  r.summary = {{"catalog_size", small.size()},
               {"contractible", c.contractible.size()},
               {"samples_per_pair", samples},
               {"samples", c.samples}};
  return r;
}

using HopfSuite = std::function<PairResult(const std::string&, const RunConfig&)>;
using PairSuite =
    std::function<PairResult(std::size_t, const std::pair<std::string, std::string>&, const RunConfig&)>;

void run_over_hopfs(Report& r, const RunConfig& cfg, const HopfSuite& suite) {
  auto names = selected_hopfs(cfg);
  r.inputs["hopf"] = names;
  merge(r,
        parallel_map<PairResult>(names.size(), cfg.threads,
                                 [&](std::size_t i) { return suite(names[i], cfg); }),
        names);
}

void run_over_pairs(Report& r, const RunConfig& cfg, const PairSuite& suite) {
  auto pairs = selected_pairs(cfg);
  std::vector<std::string> labels;
  Json jp = Json::array();
  for (const auto& pr : pairs) {
    labels.push_back(pair_name(pr));
    jp.push_back({{"a", pr.first}, {"hopf", pr.second}});
  }
  r.inputs["pairs"] = jp;
  merge(r,
        parallel_map<PairResult>(pairs.size(), cfg.threads,
                                 [&](std::size_t i) { return suite(i, pairs[i], cfg); }),
        labels);
}

// ---- compute ----------------------------------------------------------------

const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing ") + flag);
  return *v;
}

}  // namespace

unsigned threads_from_env() {
  if (const char* env = std::getenv("HOPFO_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["seed"] = seed;
  j["window"] = window;
  j["catalog_relative"] = true;
  j["inputs"] = inputs;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"key", c.key}, {"pass", c.pass}, {"witness", c.witness}});
  j["checks"] = cs;
  j["summary"] = summary;
  j["warnings"] = warnings;
  j["passed"] = checks.size() - failures();
  j["failed"] = failures();
  j["ok"] = ok();
  return j;
}

std::string Report::to_table() const {
  std::ostringstream os;
  os << command << "  seed=" << seed << "  window=" << window << "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.key.size());
  for (const auto& c : checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.key;
    if (!c.witness.empty()) os << "  " << c.witness.dump();
    os << "\n";
  }
  if (!summary.empty() && summary.contains("result")) os << "result  " << summary["result"].dump() << "\n";
  for (const auto& w : warnings) os << "warning  " << w << "\n";
  os << (ok() ? "ok" : "FAILED") << "  " << checks.size() - failures() << "/" << checks.size() << " checks passed\n";
  return os.str();
}

const std::vector<std::string>& catalog_hopf_names() {
  static const std::vector<std::string> names{"divided_power:2", "divided_power:3", "divided_power:5", "group:q:2",
                                              "group:3:3",       "sweedler:3",      "taft:2:3",        "taft:4:5"};
  return names;
}

const std::vector<std::pair<std::string, std::string>>& default_pairs() {
  static const std::vector<std::pair<std::string, std::string>> pairs{{"k", "divided_power:2"},
                                                                      {"k", "divided_power:3"},
                                                                      {"truncpoly:2", "divided_power:2"},
                                                                      {"k", "sweedler:3"},
                                                                      {"a2quiver", "divided_power:2"}};
  return pairs;
}

std::vector<std::pair<std::string, HModule>> hmodule_catalog(const HopfPtr& h) {
  std::vector<std::pair<std::string, HModule>> out;
  auto add = [&](const std::string& name, HModule m) {
    if (m.dim() > 0 && m.dim() <= 3 * h->dim() && out.size() < 14) out.push_back({name, std::move(m)});
  };
  HModule k = trivial_module(h), reg = regular_module(h);
  HModule q = quotient_by_integral(h).module, ker = counit_kernel_module(h).module;
  add("k", k);
  add("H", reg);
  add("quotient", q);
  add("kernel", ker);
  if (h->family() == "divided_power")
    for (std::size_t j = 2; j < h->dim(); ++j) add("J" + std::to_string(j), jordan_module(h, j));
  for (std::size_t i = 0; i < h->characters().size() && i < 4; ++i) {
    HModule chi = character_module(h, i);
    if (!(chi.actions() == k.actions())) add("chi" + std::to_string(i), chi);
  }
  add("k+k", direct_sum(k, k));
  add("k+H", direct_sum(k, reg));
  add("quotient*quotient", tensor(q, q));
  add("kernel*kernel", tensor(ker, ker));
  add("sigma2", suspend_n(k, 2));
  add("sigma-2", suspend_n(k, -2));
  add("H+quotient", direct_sum(reg, q));
  add("kernel*H", tensor(ker, reg));
  add("k+k+k", direct_sum({k, k, k}));
  return out;
}

std::vector<std::pair<std::string, Representation>> a_module_catalog(const CategoryPtr& cat) {
  std::vector<std::pair<std::string, Representation>> out{{"regular", regular_representation(cat->algebra())}};
  const Field& f = cat->field();
  if (cat->name() == "a2quiver") {
    auto quiver = [&](std::size_t p, std::size_t q, std::size_t r) {
      const std::size_t d = p + q;
      Matrix ex(f, d, d), ey(f, d, d), a(f, d, d);
      for (std::size_t i = 0; i < p; ++i) ex.set(i, i, 1);
      for (std::size_t i = 0; i < q; ++i) ey.set(p + i, p + i, 1);
      for (std::size_t i = 0; i < r; ++i) a.set(p + i, i, 1);
      return validated_representation(cat->algebra(), d, {ex, ey, a});
    };
    out.push_back({"quiver:1:0:0", quiver(1, 0, 0)});
    out.push_back({"quiver:0:1:0", quiver(0, 1, 0)});
    out.push_back({"quiver:1:1:1", quiver(1, 1, 1)});
  } else if (cat->name().rfind("truncpoly", 0) == 0) {
    for (std::size_t j = 1; j < cat->dim(); ++j) {
      std::vector<Matrix> action;
      for (std::size_t i = 0; i < cat->dim(); ++i) {
        Matrix a(f, j, j);
        for (std::size_t r = 0; r + i < j; ++r) a.set(r + i, r, 1);
        action.push_back(std::move(a));
      }
      out.push_back({"trunc" + std::to_string(j), validated_representation(cat->algebra(), j, std::move(action))});
    }
  } else if (cat->name() == "k") {
    out.push_back({"k2", free_representation(cat->algebra(), 2)});
  }
  return out;
}

std::vector<NamedModule> equivariant_module_catalog(const SmashPtr& s) {
  std::vector<NamedModule> out;
  HopfPtr h = s->hopf();
  auto hm = hmodule_catalog(h);
  if (s->base()->name() == "k") {
    for (const auto& [name, m] : hm) out.push_back({name, from_hmodule(m)});
    return out;
  }
  EquivariantModule a = category_module(s);
  out.push_back({"A", a});
  out.push_back({"free1", free_equivariant(s, 1)});
  for (const auto& [name, n] : a_module_catalog(s->base())) {
    out.push_back({"C:" + name, cone_adjoint_C(s, n)});
    out.push_back({"E:" + name, E_functor(s, n)});
  }
  for (const auto& [name, v] : hm) {
    if (out.size() >= 14) break;
    if (name == "k" || v.dim() > 2 * h->dim()) continue;
    out.push_back({"A*" + name, tensor_with_hmodule(a, v)});
  }
  return out;
}

SmashPtr make_smash(const HopfPtr& h, const std::string& spec, const fs::path& base) {
  if (spec == "k") return unit_smash(h);
  return SmashAlgebra::create(resolve_category(h, spec, base));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf-axioms", "homology-basics", "stablehom-agreement",
                                              "cone-lemmas", "adjunctions",     "a-split-lemmas",
                                              "les",         "hovey",           "cntr-pair"};
  return names;
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
  if (cfg.window < 1) throw InputError("--window must be at least 1");
  Report r;
  r.command = "suite " + name;
  r.seed = cfg.seed;
  r.window = cfg.window;
  if (name == "hopf-axioms") {
    run_over_hopfs(r, cfg, hopf_axioms);
  } else if (name == "homology-basics") {
    run_over_hopfs(r, cfg, homology_basics);
  } else if (name == "stablehom-agreement") {
    run_over_pairs(r, cfg, stablehom_agreement);
  } else if (name == "cone-lemmas") {
    Report hopfs = r, pairs = r;
    run_over_hopfs(hopfs, cfg, cone_lemmas_hopf);
    run_over_pairs(pairs, cfg, cone_lemmas_pair);
    r.inputs = {{"hopf", hopfs.inputs["hopf"]}, {"pairs", pairs.inputs["pairs"]}};
    r.checks = std::move(hopfs.checks);
    for (auto& c : pairs.checks) r.checks.push_back(std::move(c));
    r.summary = hopfs.summary;
  } else if (name == "adjunctions") {
    run_over_pairs(r, cfg, adjunctions);
  } else if (name == "a-split-lemmas") {
    run_over_pairs(r, cfg, a_split_lemmas);
  } else if (name == "les") {
    run_over_pairs(r, cfg, [](std::size_t i, const auto& pr, const RunConfig& c) {
      PairResult full = a_split_lemmas(i, pr, c);
      PairResult out;
      for (auto& ch : full.checks)
        if (ch.key.rfind("les/", 0) == 0) out.checks.push_back(std::move(ch));
      out.summary = {{"les_extensions", full.summary["les_extensions"]},
                     {"nonzero_connecting", full.summary["nonzero_connecting"]}};
      return out;
    });
  } else if (name == "hovey") {
    run_over_pairs(r, cfg, hovey);
  } else if (name == "cntr-pair") {
    run_over_pairs(r, cfg, cntr_pair);
  } else {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw InputError("unknown suite '" + name + "' (expected one of " + known + ")");
  }
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.key < b.key; });
  return r;
}

const std::vector<std::string>& compute_names() {
  static const std::vector<std::string> names{"integral", "homology", "stablehom", "cone",
                                              "suspend",  "ext1",     "smash",     "jordan"};
  return names;
}

Report run_compute(const std::string& what, const ComputeArgs& args, const RunConfig& cfg) {
  Report r;
  r.command = "compute " + what;
  r.seed = cfg.seed;
  r.window = cfg.window;
  const std::string& hopf_name = require(cfg.hopf, "--hopf");
  HopfPtr h = resolve_hopf(hopf_name, cfg.base);
  r.inputs["hopf"] = hopf_name;
  Json result = Json::object();
  auto hmodule = [&]() {
    const std::string& spec = require(args.module, "--module");
    r.inputs["module"] = spec;
    return resolve_hmodule(h, spec, cfg.base);
  };
  auto smash = [&]() {
    std::string a = cfg.a.value_or("k");
    r.inputs["a"] = a;
    return make_smash(h, a, cfg.base);
  };
  if (what == "integral") {
    result["lambda"] = vector_to_json(h->left_integral());
    Json terms = Json::object();
    for (std::size_t i = 0; i < h->dim(); ++i) {
      Scalar c = h->left_integral().at(i, 0);
      if (!c.is_zero()) terms[h->labels()[i]] = scalar_to_json(c);
    }
    result["terms"] = terms;
    result["epsilon_lambda"] = scalar_to_json(h->counit_of(h->left_integral()));
    result["semisimple"] = h->is_semisimple();
  } else if (what == "homology") {
    HModule m = hmodule();
    HomologyData d = homology(m);
    result = {{"dim", d.dim}, {"dim_Z", d.cycles.dim()}, {"dim_B", d.boundaries.dim()}, {"module_dim", m.dim()}};
  } else if (what == "jordan") {
    HModule m = hmodule();
    if (h->family() != "divided_power") throw InputError("jordan needs a divided_power algebra");
    result = {{"jordan_type", jordan_decompose(m)}, {"module_dim", m.dim()}};
  } else if (what == "cone" || what == "suspend") {
    HModule m = hmodule();
    HModule out = what == "cone" ? cone(m) : suspend_n(m, args.shift);
    if (what == "suspend") r.inputs["n"] = args.shift;
    HomologyData d = homology(out);
    result = {{"dim", out.dim()}, {"homology_dim", d.dim}, {"projective", is_projective(out)}};
    if (what == "suspend") result["stable_dim"] = stable_suspend(m, args.shift).dim();
  } else if (what == "stablehom" || what == "ext1") {
    SmashPtr s = smash();
    const std::string& ms = require(args.m, "--m");
    const std::string& ns = require(args.n, "--n");
    r.inputs["m"] = ms;
    r.inputs["n"] = ns;
    EquivariantModule m = resolve_equivariant(s, ms, cfg.base), n = resolve_equivariant(s, ns, cfg.base);
    if (what == "stablehom") {
      StableHomData d = stable_hom(m, n);
      Json reps = Json::array();
      for (const auto& rep : d.representatives) reps.push_back(matrix_to_json(rep));
      result = {{"dim", d.dim},
                {"hom_space_homology_dim", d.homology_dim},
                {"equivariant_dim", d.equivariant_dim},
                {"null_homotopic_dim", d.null_homotopic_dim},
                {"representatives", reps}};
    } else {
      Ext1Data d = ext1(m, n);
      Json reps = Json::array();
      for (const auto& rep : d.representatives) reps.push_back(matrix_to_json(rep));
      result = {{"dim", d.dim},
                {"free_rank", d.pres.free.dim() / std::max<std::size_t>(1, s->dim())},
                {"kernel_dim", d.pres.kernel.dim()},
                {"cocycles_dim", d.cocycles.dim()},
                {"coboundaries_dim", d.coboundaries.dim()},
                {"representatives", reps}};
    }
  } else if (what == "smash") {
    SmashPtr s = smash();
    result = {{"dim", s->dim()},
              {"category_dim", s->base()->dim()},
              {"objects", s->base()->raw().objects},
              {"hopf_dim", h->dim()}};
  } else {
    std::string known;
    for (const auto& s : compute_names()) known += (known.empty() ? "" : ", ") + s;
    throw InputError("unknown computation '" + what + "' (expected one of " + known + ")");
  }
  r.summary["result"] = result;
  return r;
}

Check validate_file(const fs::path& path) {
  Json j = read_json_file(path);
  fs::path base = path.parent_path();
  std::string kind;
  if (j.contains("mult") || j.contains("comult")) kind = "hopf";
  else if (j.contains("morphisms")) kind = "hmodcat";
  else if (j.contains("object_grading")) kind = "eqmod";
  else if (j.contains("action")) kind = "module";
  else throw InputError(path.string() + ": cannot tell the file kind (expected hopf, module, hmodcat or eqmod fields)");
  Check c{path.string(), true, {{"kind", kind}}};
  try {
    if (kind == "hopf") {
      HopfPtr h = validate_hopf(raw_hopf_from_json(j));
      c.witness["dim"] = h->dim();
      c.witness["semisimple"] = h->is_semisimple();
    } else if (kind == "module") {
      c.witness["dim"] = module_from_json(j, base).dim();
    } else if (kind == "hmodcat") {
      c.witness["dim"] = category_from_json(j, base)->dim();
    } else {
      c.witness["dim"] = eqmod_from_json(j, base).dim();
    }
  } catch (const ValidationError& e) {
    c.pass = false;
    c.witness["error"] = e.what();
  } catch (const DimensionError& e) {
    c.pass = false;
    c.witness["error"] = e.what();
  }
  return c;
}

}  // namespace hopfo
