#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gaugelat::cli {

// Flat key-value recipe. Lines are `key = value`, `[section]` headers start a
// section, `#` starts a comment. Keys before any header belong to section "".
class Recipe {
 public:
  static Recipe parse(const std::string& text, const std::string& origin = "<recipe>");
  static Recipe load(const std::string& path);

  // Canonical text: sections and keys sorted, one `key = value` per line.
  std::string serialize() const;
  // FNV-1a 64 of serialize(), as 16 hex digits.
  std::string hash() const;

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key) const;
  std::optional<std::string> find(const std::string& section, const std::string& key) const;
  void set(const std::string& section, const std::string& key, const std::string& value);

  const std::map<std::string, std::map<std::string, std::string>>& sections() const { return data_; }

  bool operator==(const Recipe&) const = default;

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
};

// Typed reads that collect problems instead of throwing, so a validation
// error can list every offending field at once.
class RecipeReader {
 public:
  explicit RecipeReader(const Recipe& recipe) : recipe_(recipe) {}

  double real(const std::string& section, const std::string& key, double fallback);
  int integer(const std::string& section, const std::string& key, int fallback);
  std::string text(const std::string& section, const std::string& key, const std::string& fallback);
  std::vector<int> integers(const std::string& section, const std::string& key,
                            const std::vector<int>& fallback);
  std::vector<double> reals(const std::string& section, const std::string& key,
                            const std::vector<double>& fallback);
  std::vector<std::string> words(const std::string& section, const std::string& key,
                                 const std::vector<std::string>& fallback);

  void require(bool ok, const std::string& field, const std::string& message);
  // Also reports keys that no reader asked for.
  void finish() const;

 private:
  std::string mark(const std::string& section, const std::string& key);

  const Recipe& recipe_;
  std::vector<std::string> problems_;
  std::map<std::string, bool> used_;
};

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace gaugelat::cli
