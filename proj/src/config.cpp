#include "hallmhd/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hallmhd/errors.hpp"

namespace hallmhd {

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "grid.n",          "grid.L",           "params.mu",           "params.nu",
      "params.gamma",    "params.hall",      "params.nonlinear",    "initial.kind",
      "initial.amplitude", "initial.seed",   "initial.scale",       "stepping.dt",
      "stepping.t_end",  "stepping.cfl_safety", "stepping.scheme",  "stepping.snapshot_every",
      "stepping.regime_abort", "diagnostics.beta", "diagnostics.fit_t0", "diagnostics.fit_t1",
      "diagnostics.R",   "output.dir"};
  return keys;
}

const std::vector<std::string>& required_config_keys() {
  static const std::vector<std::string> keys{"grid.n", "grid.L", "params.mu", "params.nu"};
  return keys;
}

std::string env_var_for(const std::string& key) {
  std::string name = "HALLMHD_";
  for (char c : key) {
    if (c == '.') {
      name += "__";
    } else {
      name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  return name;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool known_key(const std::string& key) {
  const auto& keys = config_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  if (!value.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ConfigError(key, "expected a finite number, got '" + value + "'");
  }
  return v;
}

long long to_integer(const std::string& key, const std::string& value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "expected an integer, got '" + value + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(key, "expected a boolean, got '" + value + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw ConfigError(key, "expected a comma-separated list of numbers");
  return out;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_key(key)) throw ConfigError(key, "unknown key (line " + std::to_string(lineno) + ")");
    if (value.empty()) throw ConfigError(key, "empty value (line " + std::to_string(lineno) + ")");
    if (!out.emplace(key, value).second) {
      throw ConfigError(key, "duplicate key (line " + std::to_string(lineno) + ")");
    }
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::map<std::string, std::string> config_from_environment() {
  std::map<std::string, std::string> out;
  for (const auto& key : config_keys()) {
    if (const char* v = std::getenv(env_var_for(key).c_str())) out[key] = trim(v);
  }
  return out;
}

RunConfig build_config(const std::map<std::string, std::string>& file,
                       const std::map<std::string, std::string>& env,
                       const std::map<std::string, std::string>& flags, ConfigScope scope) {
  std::map<std::string, std::string> merged;
  for (const auto* source : {&file, &env, &flags}) {
    for (const auto& [k, v] : *source) {
      if (!known_key(k)) throw ConfigError(k, "unknown key");
      merged[k] = v;
    }
  }
  for (const auto& key : required_config_keys()) {
    if (scope == ConfigScope::run && !merged.count(key)) throw ConfigError(key, "missing required key");
  }

  RunConfig c;
  auto has = [&](const std::string& k) { return merged.count(k) > 0; };
  auto str = [&](const std::string& k) { return merged.at(k); };

  if (has("grid.n")) {
    const long long n = to_integer("grid.n", str("grid.n"));
    if (n < 8 || n > (1 << 12) || (n & (n - 1)) != 0) {
      throw ConfigError("grid.n", "must be a power of two >= 8, got " + str("grid.n"));
    }
    c.grid.n = static_cast<int>(n);
  }
  if (has("grid.L")) {
    c.grid.L = to_double("grid.L", str("grid.L"));
    if (!(c.grid.L > 0.0)) throw ConfigError("grid.L", "box length must be > 0");
  }

  if (has("params.mu")) c.params.mu = to_double("params.mu", str("params.mu"));
  if (has("params.nu")) c.params.nu = to_double("params.nu", str("params.nu"));
  if (!(c.params.mu > 0.0)) {
    throw ConfigError("params.mu", "violates the physical condition mu > 0, 2*mu + 3*nu >= 0");
  }
  if (!(2.0 * c.params.mu + 3.0 * c.params.nu >= 0.0)) {
    throw ConfigError("params.nu", "violates the physical condition mu > 0, 2*mu + 3*nu >= 0");
  }
  if (has("params.gamma")) c.params.gamma = to_double("params.gamma", str("params.gamma"));
  if (!(c.params.gamma >= 1.0)) throw ConfigError("params.gamma", "pressure exponent must be >= 1");
  if (has("params.hall")) c.params.hall = to_bool("params.hall", str("params.hall"));
  if (has("params.nonlinear")) c.params.nonlinear = to_bool("params.nonlinear", str("params.nonlinear"));

  if (has("initial.kind")) {
    try {
      c.initial.kind = parse_initial_kind(str("initial.kind"));
    } catch (const InvalidArgument& e) {
      throw ConfigError("initial.kind", e.what());
    }
  }
  if (has("initial.amplitude")) c.initial.amplitude = to_double("initial.amplitude", str("initial.amplitude"));
  if (!(c.initial.amplitude >= 0.0)) throw ConfigError("initial.amplitude", "must be >= 0");
  if (has("initial.seed")) {
    const long long seed = to_integer("initial.seed", str("initial.seed"));
    if (seed < 0) throw ConfigError("initial.seed", "must be >= 0");
    c.initial.seed = static_cast<std::uint64_t>(seed);
  }
  if (has("initial.scale")) c.initial.scale = to_double("initial.scale", str("initial.scale"));

  if (has("stepping.dt")) c.stepping.dt = to_double("stepping.dt", str("stepping.dt"));
  if (!(c.stepping.dt > 0.0)) throw ConfigError("stepping.dt", "must be > 0");
  if (has("stepping.t_end")) c.stepping.t_end = to_double("stepping.t_end", str("stepping.t_end"));
  if (!(c.stepping.t_end >= 0.0)) throw ConfigError("stepping.t_end", "must be >= 0");
  if (has("stepping.cfl_safety")) {
    c.stepping.cfl_safety = to_double("stepping.cfl_safety", str("stepping.cfl_safety"));
  }
  if (!(c.stepping.cfl_safety > 0.0 && c.stepping.cfl_safety <= 1.0)) {
    throw ConfigError("stepping.cfl_safety", "must lie in (0, 1]");
  }
  if (has("stepping.scheme")) {
    try {
      c.stepping.scheme = parse_scheme(str("stepping.scheme"));
    } catch (const InvalidArgument& e) {
      throw ConfigError("stepping.scheme", e.what());
    }
  }
  if (has("stepping.snapshot_every")) {
    c.stepping.snapshot_every = to_double("stepping.snapshot_every", str("stepping.snapshot_every"));
  }
  if (has("stepping.regime_abort")) {
    c.stepping.regime_abort = to_bool("stepping.regime_abort", str("stepping.regime_abort"));
  }

  if (has("diagnostics.beta")) c.diagnostics.beta = to_double("diagnostics.beta", str("diagnostics.beta"));
  if (!(c.diagnostics.beta >= 0.0)) throw ConfigError("diagnostics.beta", "must be >= 0");
  if (has("diagnostics.fit_t0")) c.diagnostics.fit_t0 = to_double("diagnostics.fit_t0", str("diagnostics.fit_t0"));
  if (has("diagnostics.fit_t1")) c.diagnostics.fit_t1 = to_double("diagnostics.fit_t1", str("diagnostics.fit_t1"));
  if (has("diagnostics.R")) c.diagnostics.R = to_list("diagnostics.R", str("diagnostics.R"));
  for (double R : c.diagnostics.R) {
    if (!(R > 0.0)) throw ConfigError("diagnostics.R", "splitting radii must be > 0");
  }
  if (has("output.dir")) c.output_dir = str("output.dir");
  return c;
}

RunConfig parse_config(const std::optional<std::filesystem::path>& path,
                       const std::map<std::string, std::string>& flags, ConfigScope scope) {
  const auto file = path ? read_config_file(*path) : std::map<std::string, std::string>{};
  return build_config(file, config_from_environment(), flags, scope);
}

}  // namespace hallmhd
