#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "residua/io.hpp"
#include "residua/reports.hpp"

namespace {

using residua::Report;

int carrier_cap() {
  if (const char* env = std::getenv("RESIDUA_MAX_CARRIER")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return residua::kMaxCarrier;
}

residua::StructuredPoset load(const std::string& path) {
  return residua::validate(residua::load_poset_file(path), carrier_cap());
}

int emit(const Report& rep, bool as_json, std::chrono::steady_clock::time_point start) {
  if (as_json) {
    std::cout << rep.body.dump(2) << "\n";
  } else {
    std::cout << residua::render_human(rep.body);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "elapsed: " << ms << " ms\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for residuation operators on finite posets"};
  app.require_subcommand(1);

  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "emit the report as JSON")->configurable(false);
  app.add_option("--threads", threads, "worker thread budget")->capture_default_str();
  app.fallthrough();

  std::string file, scheme = "cone", direction = "both", method = "both", claim;
  int size = 0, triple_cap = residua::kDefaultTripleCap, pair_cap = residua::kDefaultPairCap;
  std::vector<std::string> require, fixture_files;

  auto* classify = app.add_subcommand("classify", "classify a poset file");
  classify->add_option("file", file)->required();

  auto* residuate = app.add_subcommand("residuate", "verify operator residuation");
  residuate->add_option("file", file)->required();
  residuate->add_option("--scheme", scheme)->check(CLI::IsMember({"cone", "meet"}))->required();

  auto* tables = app.add_subcommand("tables", "dump the M and R operator tables");
  tables->add_option("file", file)->required();
  tables->add_option("--scheme", scheme)->check(CLI::IsMember({"cone", "meet"}))->required();

  auto* generalized = app.add_subcommand("generalized", "subset-level residuation checks");
  generalized->add_option("file", file)->required();
  generalized->add_option("--direction", direction)->check(CLI::IsMember({"15", "16", "both"}));
  generalized->add_option("--method", method)
      ->check(CLI::IsMember({"direct", "reduction", "both"}));
  generalized->add_option("--triple-cap", triple_cap);
  generalized->add_option("--pair-cap", pair_cap);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate structured posets");
  enumerate->add_option("--size", size)->required();
  enumerate->add_option("--require", require)->delimiter(',');
  enumerate->add_option("--claim", claim);
  enumerate->add_option("--fixture", fixture_files, "extra files scanned by --claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0, usage errors map to 2
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (classify->parsed()) return emit(residua::report_classify(load(file), threads), as_json, start);
    if (residuate->parsed())
      return emit(
          residua::report_residuate(load(file), residua::scheme_from_name(scheme), threads),
          as_json, start);
    if (tables->parsed())
      return emit(residua::report_tables(load(file), residua::scheme_from_name(scheme)),
                  as_json, start);
    if (generalized->parsed()) {
      residua::GeneralizedOptions opt{direction, method, pair_cap, triple_cap};
      return emit(residua::report_generalized(load(file), opt, threads), as_json, start);
    }
    if (enumerate->parsed()) {
      std::vector<residua::StructuredPoset> fixtures;
      for (const auto& f : fixture_files) fixtures.push_back(load(f));
      residua::EnumSpec spec{size, require, true};
      return emit(residua::report_enumerate(spec, claim, fixtures), as_json, start);
    }
  } catch (const residua::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
