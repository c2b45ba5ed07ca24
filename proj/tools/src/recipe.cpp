#include "recipe.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gaugelat/errors.hpp"

namespace gaugelat::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
bool parse_number(const std::string& s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string field_name(const std::string& section, const std::string& key) {
  return section.empty() ? key : section + "." + key;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Recipe Recipe::parse(const std::string& text, const std::string& origin) {
  Recipe r;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']')
        throw Error(ErrorKind::validation_error, where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::validation_error, where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw Error(ErrorKind::validation_error, where + ": empty key");
    if (r.has(section, key))
      throw Error(ErrorKind::validation_error, where + ": duplicate key " + field_name(section, key));
    r.data_[section][key] = trim(line.substr(eq + 1));
  }
  return r;
}

Recipe Recipe::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::io_error, "cannot read recipe " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

std::string Recipe::serialize() const {
  std::string out;
  for (const auto& [section, keys] : data_) {
    if (keys.empty()) continue;
    if (!section.empty()) out += (out.empty() ? "[" : "\n[") + section + "]\n";
    for (const auto& [k, v] : keys) out += k + " = " + v + "\n";
  }
  return out;
}

std::string Recipe::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(serialize())));
  return buf;
}

bool Recipe::has(const std::string& section, const std::string& key) const {
  return find(section, key).has_value();
}

std::optional<std::string> Recipe::find(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  if (s == data_.end()) return std::nullopt;
  const auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

std::string Recipe::get(const std::string& section, const std::string& key) const {
  auto v = find(section, key);
  if (!v) throw Error(ErrorKind::lookup_error, "recipe has no " + field_name(section, key));
  return *v;
}

void Recipe::set(const std::string& section, const std::string& key, const std::string& value) {
  data_[section][key] = value;
}

std::string RecipeReader::mark(const std::string& section, const std::string& key) {
  used_[field_name(section, key)] = true;
  return field_name(section, key);
}

double RecipeReader::real(const std::string& section, const std::string& key, double fallback) {
  const std::string name = mark(section, key);
  const auto v = recipe_.find(section, key);
  if (!v) return fallback;
  double x = 0;
  if (!parse_number(*v, x)) {
    problems_.push_back(name + ": not a number: '" + *v + "'");
    return fallback;
  }
  return x;
}

int RecipeReader::integer(const std::string& section, const std::string& key, int fallback) {
  const std::string name = mark(section, key);
  const auto v = recipe_.find(section, key);
  if (!v) return fallback;
  int x = 0;
  if (!parse_number(*v, x)) {
    problems_.push_back(name + ": not an integer: '" + *v + "'");
    return fallback;
  }
  return x;
}

std::string RecipeReader::text(const std::string& section, const std::string& key, const std::string& fallback) {
  mark(section, key);
  return recipe_.find(section, key).value_or(fallback);
}

std::vector<int> RecipeReader::integers(const std::string& section, const std::string& key,
                                        const std::vector<int>& fallback) {
  const std::string name = mark(section, key);
  const auto v = recipe_.find(section, key);
  if (!v) return fallback;
  std::vector<int> out;
  for (const std::string& item : split_list(*v)) {
    // a:b or a:b:step, inclusive
    int a = 0, b = 0, step = 1;
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      if (!parse_number(item, a)) {
        problems_.push_back(name + ": not an integer: '" + item + "'");
        continue;
      }
      out.push_back(a);
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    const bool ok = parse_number(trim(item.substr(0, c1)), a) &&
                    parse_number(trim(item.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1)), b) &&
                    (c2 == std::string::npos || parse_number(trim(item.substr(c2 + 1)), step));
    if (!ok || step < 1) {
      problems_.push_back(name + ": bad range '" + item + "' (use a:b or a:b:step with step >= 1)");
      continue;
    }
    for (int x = a; x <= b; x += step) out.push_back(x);
  }
  return out;
}

std::vector<double> RecipeReader::reals(const std::string& section, const std::string& key,
                                        const std::vector<double>& fallback) {
  const std::string name = mark(section, key);
  const auto v = recipe_.find(section, key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const std::string& item : split_list(*v)) {
    double x = 0;
    if (!parse_number(item, x))
      problems_.push_back(name + ": not a number: '" + item + "'");
    else
      out.push_back(x);
  }
  return out;
}

std::vector<std::string> RecipeReader::words(const std::string& section, const std::string& key,
                                             const std::vector<std::string>& fallback) {
  mark(section, key);
  const auto v = recipe_.find(section, key);
  return v ? split_list(*v) : fallback;
}

void RecipeReader::require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) problems_.push_back(field + ": " + message);
}

void RecipeReader::finish() const {
  std::vector<std::string> all = problems_;
  for (const auto& [section, keys] : recipe_.sections())
    for (const auto& [key, value] : keys)
      if (!used_.count(field_name(section, key))) all.push_back(field_name(section, key) + ": unknown key");
  if (all.empty()) return;
  std::string msg = "invalid recipe:";
  for (const std::string& p : all) msg += "\n  " + p;
  throw Error(ErrorKind::validation_error, msg);
}

}  // namespace gaugelat::cli
