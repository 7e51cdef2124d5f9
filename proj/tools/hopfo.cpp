// hopfo: validate structure files, run computations and verification suites.
// Exit codes: 0 pass, 1 check failure, 2 input error.
#include "hopfo/workbench.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr const char* kFooter = R"(Catalog shorthand (family:param[:param]):
  Hopf algebras   divided_power:p, group:p:n1[:n2..] (group:q:n over Q), sweedler:p, taft:n:p
  categories      k, truncpoly:n (d acts as d/dx; needs p | n), truncpoly:n:trivial, a2quiver
  H-modules       k, H, quotient, kernel, J<k>, chi<i>, sigma<n>, cone:<name>
  A#H-modules     A, free<r>, C:<A-module>, E:<A-module>, A*<H-module>; with --a k any H-module name
  A-modules       regular, trunc<j>, quiver:<dim x>:<dim y>:<rank>
Any name may be replaced by a path to a .json file.
Environment: HOPFO_THREADS limits the number of worker threads.)";

int emit(const hopfo::Report& report, const std::string& format, const std::string& output) {
  std::string text = format == "table" ? report.to_table() : report.to_json().dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    out << text;
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopfological algebra workbench"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  hopfo::RunConfig cfg;
  std::string format = "json";
  std::string output;
  std::string hopf, a;
  app.add_option("--window,-w", cfg.window, "shift window [-w, w]")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed, echoed into reports");
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--output,-o", output, "write the report to a file");
  app.add_option("--hopf", hopf, "Hopf algebra (catalog name or hopf.json)");
  app.add_option("--a", a, "H-module category (k, truncpoly:n, a2quiver or hmodcat.json)");

  auto* validate = app.add_subcommand("validate", "validate hopf/module/hmodcat/eqmod JSON files");
  std::vector<std::string> paths;
  validate->add_option("paths", paths, "files to validate")->required();

  auto* compute = app.add_subcommand("compute", "run one computation");
  std::string what;
  hopfo::ComputeArgs args;
  std::string module, m, n;
  compute->add_option("what", what, "integral, homology, stablehom, cone, suspend, ext1, smash or jordan")
      ->required()
      ->check(CLI::IsMember(hopfo::compute_names()));
  compute->add_option("--module", module, "H-module");
  compute->add_option("--m", m, "source module (A#H)");
  compute->add_option("--n", n, "target module (A#H)");
  compute->add_option("--shift", args.shift, "suspension degree for suspend");

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  std::string suite_name;
  suite->add_option("name", suite_name, "suite name")->required()->check(CLI::IsMember(hopfo::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.threads = hopfo::threads_from_env();
  if (!hopf.empty()) cfg.hopf = hopf;
  if (!a.empty()) cfg.a = a;
  if (!module.empty()) args.module = module;
  if (!m.empty()) args.m = m;
  if (!n.empty()) args.n = n;

  try {
    if (*validate) {
      hopfo::Report r;
      r.command = "validate";
      r.seed = cfg.seed;
      r.window = cfg.window;
      r.inputs["paths"] = paths;
      for (const auto& p : paths) {
        hopfo::Check c = hopfo::validate_file(p);
        if (!c.pass) std::cerr << p << ": " << c.witness["error"].get<std::string>() << "\n";
        r.checks.push_back(std::move(c));
      }
      return emit(r, format, output);
    }
    if (*compute) return emit(hopfo::run_compute(what, args, cfg), format, output);
    return emit(hopfo::run_suite(suite_name, cfg), format, output);
  } catch (const hopfo::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hopfo::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const hopfo::DimensionError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const hopfo::InternalError& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
}
