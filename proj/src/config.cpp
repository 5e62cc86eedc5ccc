#include "subjscan/config.hpp"

#include <fstream>
#include <sstream>

namespace subjscan {

namespace {

constexpr std::string_view kVerbPrefix = "verb.";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

TagSet split_words(std::string_view s) {
  TagSet out;
  std::istringstream in{std::string(s)};
  for (std::string word; in >> word;) out.insert(word);
  return out;
}

std::string join(const TagSet& set) {
  std::string out;
  for (const auto& s : set) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

ToolConfig ToolConfig::defaults() {
  ToolConfig config;
  config.verbs["realize"] = {"realize", "realizes", "realized", "realizing",
                             "realise", "realises", "realised", "realising"};
  config.verbs["return"] = {"return", "returns", "returned", "returning"};
  return config;
}

const InflectionSet& ToolConfig::inflections_for(std::string_view lemma) const {
  auto it = verbs.find(lemma);
  if (it == verbs.end() || it->second.empty()) {
    throw Error(ErrorCode::EmptyInflectionSet,
                "no inflections configured for verb '" + std::string(lemma) + "'");
  }
  return it->second;
}

ToolConfig parse_tool_config(std::string_view text, ToolConfig base) {
  ToolConfig config = std::move(base);
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_number;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError,
                  "line " + std::to_string(line_number) + ": expected 'key = values'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    TagSet values = split_words(line.substr(eq + 1));

    if (key == "pronoun_pos_tags") {
      config.classifier.pronoun_pos_tags = std::move(values);
    } else if (key == "proper_pos_tags") {
      config.classifier.proper_pos_tags = std::move(values);
    } else if (key == "definite_determiners") {
      config.classifier.definite_determiners = std::move(values);
    } else if (key == "indefinite_determiners") {
      config.classifier.indefinite_determiners = std::move(values);
    } else if (key.starts_with(kVerbPrefix) && key.size() > kVerbPrefix.size()) {
      InflectionSet forms;
      for (const auto& v : values) forms.insert(lowercase(v));
      config.verbs[lowercase(key.substr(kVerbPrefix.size()))] = std::move(forms);
    } else {
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(line_number) +
                                              ": unknown key '" + std::string(key) + "'");
    }
  }
  config.classifier.validate();
  return config;
}

ToolConfig load_tool_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_tool_config(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string render_tool_config(const ToolConfig& config) {
  std::string out = "# subjscan classifier and verb lexicon\n";
  out += "pronoun_pos_tags = " + join(config.classifier.pronoun_pos_tags) + "\n";
  out += "proper_pos_tags = " + join(config.classifier.proper_pos_tags) + "\n";
  out += "definite_determiners = " + join(config.classifier.definite_determiners) + "\n";
  out += "indefinite_determiners = " + join(config.classifier.indefinite_determiners) + "\n";
  for (const auto& [lemma, forms] : config.verbs) {
    out += std::string(kVerbPrefix) + lemma + " = " + join(forms) + "\n";
  }
  return out;
}

}  // namespace subjscan
