#include "glfem/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "glfem/exceptions.hpp"

namespace glfem {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, const char* expected) {
  throw ConfigError("invalid value '" + std::string(value) + "' for '" + std::string(key) +
                    "': expected " + expected);
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    bad_value(key, text, "an integer");
  }
  return value;
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  // std::from_chars for double is unavailable on some toolchains; strtod is
  // locale-sensitive but the CLI never changes the locale.
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    bad_value(key, text, "a number");
  }
  return value;
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view key, std::string_view text, Parse parse) {
  std::vector<T> out;
  text = trim(text);
  if (text.empty()) {
    bad_value(key, text, "a comma-separated list");
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse(key, item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "yes" || text == "1" || text == "on") return true;
  if (text == "false" || text == "no" || text == "0" || text == "off") return false;
  bad_value(key, text, "true or false");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "problem", "sizes",  "tau-rule",    "k",          "t-final",       "snapshots", "out",
      "solver-tol", "solver", "quad", "postprocess", "source-timing", "off-grid"};
  return keys;
}

void apply_setting(StudyConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "problem") {
    config.problem = std::string(value);
  } else if (key == "sizes") {
    config.sizes = parse_list<int>(key, value, parse_int);
  } else if (key == "tau-rule") {
    if (value == "h") {
      config.tau_rule = TauRule::h;
    } else if (value == "kh") {
      config.tau_rule = TauRule::kh;
    } else {
      bad_value(key, value, "h or kh");
    }
  } else if (key == "k") {
    config.k = parse_list<int>(key, value, parse_int);
  } else if (key == "t-final") {
    config.t_final = parse_double(key, value);
  } else if (key == "snapshots") {
    config.snapshots = parse_list<double>(key, value, parse_double);
  } else if (key == "out") {
    config.out = std::string(value);
  } else if (key == "solver-tol") {
    config.solver_tol = parse_double(key, value);
  } else if (key == "solver") {
    if (value == "direct") {
      config.solver = SolverKind::direct;
    } else if (value == "bicgstab") {
      config.solver = SolverKind::bicgstab;
    } else {
      bad_value(key, value, "direct or bicgstab");
    }
  } else if (key == "quad") {
    config.quad = parse_int(key, value);
  } else if (key == "postprocess") {
    config.postprocess = parse_bool(key, value);
  } else if (key == "source-timing") {
    if (value == "midpoint") {
      config.source_timing = SourceTiming::midpoint;
    } else if (value == "average") {
      config.source_timing = SourceTiming::average;
    } else {
      bad_value(key, value, "midpoint or average");
    }
  } else if (key == "off-grid") {
    if (value == "error") {
      config.off_grid = OffGridPolicy::error;
    } else if (value == "skip") {
      config.off_grid = OffGridPolicy::skip;
    } else {
      bad_value(key, value, "error or skip");
    }
  } else {
    throw ConfigError("unknown configuration key '" + std::string(key) + "'");
  }
}

StudyConfig parse_config_text(std::string_view text, StudyConfig base) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

StudyConfig load_config_file(const std::filesystem::path& path, StudyConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read config file", path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config_text(buffer.str(), std::move(base));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void validate(const StudyConfig& config) {
  if (config.problem != "example1") {
    throw ConfigError("unknown problem '" + config.problem + "' (available: example1)");
  }
  if (config.sizes.empty()) {
    throw ConfigError("sizes must not be empty");
  }
  for (const int m : config.sizes) {
    if (m < 1) throw ConfigError("mesh sizes must be >= 1");
    if (config.postprocess && m % 2 != 0) {
      throw ConfigError("mesh size " + std::to_string(m) +
                        " is odd; postprocessing needs even sizes (set postprocess = false)");
    }
  }
  if (config.k.empty() || std::any_of(config.k.begin(), config.k.end(), [](int k) { return k < 1; })) {
    throw ConfigError("k must be a non-empty list of positive integers");
  }
  if (!(config.t_final > 0.0)) {
    throw ConfigError("t-final must be positive");
  }
  if (config.snapshots.empty()) {
    throw ConfigError("snapshots must not be empty");
  }
  for (const double t : config.snapshots) {
    if (t < 0.0 || t > config.t_final * (1.0 + 1e-12)) {
      throw ConfigError("snapshot time outside [0, t-final]");
    }
  }
  if (!(config.solver_tol > 0.0)) {
    throw ConfigError("solver-tol must be positive");
  }
  if (config.quad < 1 || config.quad > 10) {
    throw ConfigError("quad must be between 1 and 10");
  }
}

}  // namespace glfem
