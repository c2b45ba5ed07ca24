#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "gaugelat/errors.hpp"

namespace {

using namespace gaugelat;
using namespace gaugelat::cli;

struct Inputs {
  std::string recipe_path;
  std::string preset;
  RunOptions options;
  std::string out = ".";
};

void add_inputs(CLI::App* sub, Inputs& in) {
  auto* r = sub->add_option("--recipe", in.recipe_path, "Recipe file")->check(CLI::ExistingFile);
  auto* p = sub->add_option("--preset", in.preset, "Named preset shipped with the tool");
  r->excludes(p);
}

Recipe load(const Inputs& in) {
  if (!in.recipe_path.empty()) return Recipe::load(in.recipe_path);
  if (!in.preset.empty()) return Recipe::parse(preset_text(in.preset), "preset:" + in.preset);
  throw Error(ErrorKind::validation_error, "one of --recipe or --preset is required");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::validation_error:
    case ErrorKind::invalid_parameter:
    case ErrorKind::invalid_filter:
    case ErrorKind::lookup_error:
      return 2;
    case ErrorKind::io_error:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gaugelat: polymer-lattice gauge field emulation"};
  app.require_subcommand(1);

  std::vector<std::pair<std::string, Inputs>> runs;
  runs.reserve(command_names().size());
  const std::vector<std::pair<std::string, std::string>> help{
      {"butterfly", "Spectrum versus turn number p (CSV, SVG scatter)"},
      {"confinement", "Hedgehog spectrum versus L, localization flags, top-state grid"},
      {"gauge-portrait", "Pauli components of A and B_z on the hedgehog lattice"},
      {"harper-check", "JSON report on the variable-coupling map and Lambda fits"},
      {"fractal", "Box-counting dimension per p (param,D,residual)"},
  };
  for (const auto& [name, text] : help) {
    runs.emplace_back(name, Inputs{});
    Inputs& in = runs.back().second;
    CLI::App* sub = app.add_subcommand(name, text);
    add_inputs(sub, in);
    sub->add_option("--out", in.out, "Output directory")->capture_default_str();
    sub->add_option("--format", in.options.formats, "csv, json or svg (repeatable)")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->take_all()
        ->allow_extra_args(false);
    sub->add_option("--threads", in.options.threads, "Worker threads (default: GAUGELAT_THREADS, then all cores)")
        ->check(CLI::NonNegativeNumber);
  }

  CLI::App* list = app.add_subcommand("presets", "List the named presets");
  Inputs show_in;
  CLI::App* show = app.add_subcommand("show", "Print the canonical form and hash of a recipe");
  add_inputs(show, show_in);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const std::string& n : preset_names()) std::cout << n << '\n';
      return 0;
    }
    if (show->parsed()) {
      const Recipe r = load(show_in);
      std::cout << "# recipe hash " << r.hash() << '\n' << r.serialize();
      return 0;
    }
    for (auto& [name, in] : runs) {
      if (!app.got_subcommand(name)) continue;
      in.options.out_dir = in.out;
      const RunResult res = run_command(name, load(in), in.options);
      for (const auto& p : res.written) std::cout << p.string() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "gaugelat: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "gaugelat: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
