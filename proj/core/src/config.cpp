#include "hypermediator/config.hpp"

#include "hypermediator/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hypermediator {

namespace {

// Minimal reader for the key/value TOML subset used by corpus configs:
// sections, integers, basic/literal strings and single-line string arrays.
class ConfigReader {
 public:
  ConfigReader(std::string_view origin, std::size_t line) : origin_(origin), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError(std::string(origin_) + ":" + std::to_string(line_) + ": " + what);
  }

  static std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
  }

  // Parses a quoted string at the start of `s`; advances `s` past it.
  std::string string_value(std::string_view& s) const {
    if (s.empty() || (s.front() != '"' && s.front() != '\'')) fail("expected a quoted string");
    const char quote = s.front();
    std::string out;
    std::size_t i = 1;
    for (; i < s.size() && s[i] != quote; ++i) {
      if (quote == '"' && s[i] == '\\') {
        if (++i >= s.size()) fail("unterminated escape");
        switch (s[i]) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: fail(std::string("unsupported escape \\") + s[i]);
        }
      } else {
        out += s[i];
      }
    }
    if (i >= s.size()) fail("unterminated string");
    s.remove_prefix(i + 1);
    return out;
  }

  std::string single_string(std::string_view value) const {
    std::string out = string_value(value);
    if (!rest_is_comment(value)) fail("unexpected text after string");
    return out;
  }

  std::vector<std::string> string_array(std::string_view value) const {
    if (value.empty() || value.front() != '[') fail("expected an array of strings");
    value.remove_prefix(1);
    std::vector<std::string> out;
    for (;;) {
      value = trim(value);
      if (!value.empty() && value.front() == ']') break;
      out.push_back(string_value(value));
      value = trim(value);
      if (!value.empty() && value.front() == ',') {
        value.remove_prefix(1);
        continue;
      }
      if (value.empty() || value.front() != ']') fail("expected ',' or ']' in array");
    }
    value.remove_prefix(1);
    if (!rest_is_comment(value)) fail("unexpected text after array");
    return out;
  }

  std::size_t integer(std::string_view value) const {
    value = trim(value.substr(0, value.find('#')));
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
      fail("expected a non-negative integer, got \"" + std::string(value) + "\"");
    }
    return out;
  }

 private:
  static bool rest_is_comment(std::string_view rest) {
    rest = trim(rest);
    return rest.empty() || rest.front() == '#';
  }

  std::string_view origin_;
  std::size_t line_;
};

}  // namespace

void apply_config_text(BuildConfig& config, std::string_view text, std::string_view origin) {
  std::string section;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string raw; std::getline(lines, raw);) {
    ++line_no;
    const ConfigReader reader(origin, line_no);
    std::string_view line = ConfigReader::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      const auto close = line.find(']');
      if (close == std::string_view::npos) reader.fail("unterminated section header");
      section = std::string(ConfigReader::trim(line.substr(1, close - 1)));
      if (section != "captions") reader.fail("unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) reader.fail("expected key = value");
    std::string key(ConfigReader::trim(line.substr(0, eq)));
    const std::string_view value = ConfigReader::trim(line.substr(eq + 1));

    if (section.empty() && key.starts_with("captions.")) {
      key = key.substr(9);
    } else if (section.empty()) {
      if (key == "strong_min") {
        config.thresholds.strong_min = reader.integer(value);
      } else if (key == "moderate_min") {
        config.thresholds.moderate_min = reader.integer(value);
      } else if (key == "context_window") {
        config.context_window = reader.integer(value);
      } else if (key == "analogy_labels") {
        config.analogy_labels.clear();
        for (const std::string& label : reader.string_array(value)) {
          config.analogy_labels.insert(normalize_text(label));
        }
      } else {
        reader.fail("unknown key \"" + key + "\"");
      }
      continue;
    }
    if (!CaptionTemplates::is_known(key)) reader.fail("unknown caption template \"" + key + "\"");
    config.captions.set(key, reader.single_string(value));
  }
  try {
    config.thresholds.check();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(origin) + ": " + e.what());
  }
}

BuildConfig load_corpus_config(const std::filesystem::path& corpus_dir) {
  BuildConfig config;
  const auto path = corpus_dir / kConfigFileName;
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return config;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(config, buffer.str(), path.string());
  return config;
}

}  // namespace hypermediator
