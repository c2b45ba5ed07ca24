#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "recipe.hpp"

namespace gaugelat::cli {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::vector<std::string> formats;  // empty: [output] formats, then csv + json
  int threads = 0;                   // 0: recipe, then GAUGELAT_THREADS
};

struct Artifact {
  std::string file;    // name inside out_dir
  std::string format;  // csv, json or svg
  std::string contents;
};

struct RunResult {
  std::vector<std::filesystem::path> written;
};

const std::vector<std::string>& command_names();

// Computes every artifact of `command` in memory; nothing is written.
std::vector<Artifact> build_artifacts(const std::string& command, const Recipe& recipe, const RunOptions& options);

// Filters by format, adds the manifest and writes in order.
RunResult run_command(const std::string& command, const Recipe& recipe, const RunOptions& options);

std::vector<std::string> preset_names();
// Raises lookup_error for unknown names.
const std::string& preset_text(const std::string& name);

}  // namespace gaugelat::cli
