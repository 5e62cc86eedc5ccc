#pragma once

// Plain-text key/value configuration for the classifier and the verb
// lexicon:
//
//   # comment
//   pronoun_pos_tags = PRP PRP$
//   definite_determiners = the this that these those
//   verb.return = return returns returned returning
//
// Keys not present keep their compiled-in defaults.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "subjscan/givenness.hpp"
#include "subjscan/query.hpp"

namespace subjscan {

struct ToolConfig {
  ClassifierConfig classifier;
  std::map<std::string, InflectionSet, std::less<>> verbs;

  static ToolConfig defaults();

  // Throws Error(EmptyInflectionSet) when the lemma has no inflections.
  const InflectionSet& inflections_for(std::string_view lemma) const;

  friend bool operator==(const ToolConfig&, const ToolConfig&) = default;
};

// Throws Error(ConfigError) naming the offending line.
ToolConfig parse_tool_config(std::string_view text, ToolConfig base = ToolConfig::defaults());
ToolConfig load_tool_config(const std::filesystem::path& path);
std::string render_tool_config(const ToolConfig& config);

}  // namespace subjscan
