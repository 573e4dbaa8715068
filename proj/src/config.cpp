#include "ap5/config.hpp"

#include "ap5/errors.hpp"
#include "ap5/json_io.hpp"

#include <charconv>
#include <filesystem>
#include <sstream>

namespace ap5 {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
  const std::string t = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) fail(line, "expected an integer, got '" + t + "'");
  return v;
}

std::uint64_t parse_positive(const std::string& s, std::size_t line) {
  const std::int64_t v = parse_int(s, line);
  if (v < 1) fail(line, "expected a positive integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> parse_list(const std::string& s, std::size_t line) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(line, "expected a list [a, b, ...]");
  std::vector<std::uint64_t> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_positive(item, line));
  }
  return out;
}

std::string parse_string(const std::string& s, std::size_t line) {
  const std::string t = trim(s);
  if (t.size() < 2 || t.front() != '"' || t.back() != '"') fail(line, "expected a quoted string");
  return t.substr(1, t.size() - 2);
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& base_dir) {
  RunConfig cfg;
  bool stage3_seen = false;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  auto resolve = [&base_dir](const std::string& p) {
    const std::filesystem::path path(p);
    if (path.is_absolute() || base_dir.empty()) return p;
    return (std::filesystem::path(base_dir) / path).lexically_normal().string();
  };
  while (std::getline(in, raw)) {
    ++line;
    const std::string l = trim(strip_comment(raw));
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') fail(line, "unterminated section header");
      section = trim(l.substr(1, l.size() - 2));
      if (section != "stage3_primes") fail(line, "unknown section [" + section + "]");
      if (!stage3_seen) cfg.pipeline.stage3_primes.clear();
      stage3_seen = true;
      continue;
    }
    const auto eq = l.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(l.substr(0, eq));
    const std::string value = l.substr(eq + 1);
    if (section == "stage3_primes") {
      const std::uint64_t n = parse_positive(key, line);
      cfg.pipeline.stage3_primes[n] = parse_list(value, line);
      continue;
    }
    if (key == "data_dir") {
      cfg.data_dir = resolve(parse_string(value, line));
    } else if (key == "output") {
      cfg.output = resolve(parse_string(value, line));
    } else if (key == "levels") {
      cfg.levels = parse_list(value, line);
    } else if (key == "search_box_x") {
      cfg.search_box_x = static_cast<std::int64_t>(parse_positive(value, line));
    } else if (key == "search_box_d") {
      cfg.search_box_d = static_cast<std::int64_t>(parse_positive(value, line));
    } else if (key == "search_nmax") {
      cfg.search_nmax = static_cast<unsigned>(parse_positive(value, line));
      if (cfg.search_nmax < 2) fail(line, "search_nmax must be at least 2");
    } else if (key == "stage2_primes") {
      cfg.pipeline.stage2_primes = parse_list(value, line);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  cfg.pipeline.check();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const SchemaError& e) {
    throw ConfigError(e.what());
  }
  return parse_run_config(text, std::filesystem::path(path).parent_path().string());
}

}  // namespace ap5
