#include "irea/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "irea/errors.hpp"
#include "irea/io.hpp"

namespace irea {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ConfigMap ConfigMap::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config file: " + path);
  ConfigMap cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value, got '" + t + "'");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

void ConfigMap::set(const std::string& key, const std::string& value) {
  if (key.empty()) throw ConfigError("empty config key");
  kv_[key] = value;
}

void ConfigMap::apply_override(const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must be key=value, got '" + kv + "'");
  set(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
}

bool ConfigMap::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string ConfigMap::take_str(const std::string& key, const std::string& def) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  return it == kv_.end() ? def : it->second;
}

int ConfigMap::take_int(const std::string& key, int def) {
  const long long v = take_i64(key, def);
  return static_cast<int>(v);
}

long long ConfigMap::take_i64(const std::string& key, long long def) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  try {
    size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' is not an integer: '" + it->second + "'");
  }
}

double ConfigMap::take_double(const std::string& key, double def) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  try {
    return parse_double(it->second);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' is not a number: '" + it->second + "'");
  }
}

bool ConfigMap::take_bool(const std::string& key, bool def) {
  consumed_.insert(key);
  const auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + key + "' is not a boolean: '" + it->second + "'");
}

void ConfigMap::finish() const {
  std::vector<std::string> unknown;
  for (const auto& [k, v] : kv_)
    if (!consumed_.count(k)) unknown.push_back(k);
  if (!unknown.empty()) {
    std::ostringstream os;
    os << "unknown config key" << (unknown.size() > 1 ? "s" : "") << ":";
    for (const auto& k : unknown) os << " '" << k << "'";
    throw ConfigError(os.str());
  }
}

std::vector<std::pair<std::string, std::string>> ConfigMap::items() const {
  return {kv_.begin(), kv_.end()};
}

void ConfigMap::write_resolved(const std::string& path) const {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw IoError("cannot write resolved config: " + path);
  for (const auto& [k, v] : kv_) f << k << "=" << v << "\n";
}

}  // namespace irea
