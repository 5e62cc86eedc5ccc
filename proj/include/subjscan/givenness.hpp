#pragma once

// Six-way form-based givenness classification of NPs.

#include <array>
#include <bitset>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subjscan/query.hpp"
#include "subjscan/treebank.hpp"

namespace subjscan {

enum class GivennessCategory {
  EmptyCategory,
  Pronoun,
  ProperName,
  Definite,
  Indefinite,
  NotClassified,
};

inline constexpr std::array<GivennessCategory, 6> kAllCategories = {
    GivennessCategory::EmptyCategory, GivennessCategory::Pronoun,
    GivennessCategory::ProperName,    GivennessCategory::Definite,
    GivennessCategory::Indefinite,    GivennessCategory::NotClassified};

// "empty-category", "pronoun", ... as used in reports and records.
std::string_view to_string(GivennessCategory category);
std::optional<GivennessCategory> category_from_string(std::string_view name);

using TagSet = std::set<std::string, std::less<>>;

struct ClassifierConfig {
  TagSet pronoun_pos_tags{"PRP", "PRP$"};
  TagSet proper_pos_tags{"NNP", "NNPS"};
  // Compared against lower-cased tokens.
  TagSet definite_determiners{"the", "this", "that", "these", "those"};
  TagSet indefinite_determiners{"a", "an", "some", "several", "many", "few", "another", "one"};

  // Lower-cases the determiner sets and checks that they are disjoint.
  // Throws Error(ConfigError).
  void validate();

  friend bool operator==(const ClassifierConfig&, const ClassifierConfig&) = default;
};

// Which of the cascade's rules an NP satisfies, indexed by category. The
// classification is the first set bit; the rest exists for auditing rule
// overlap.
using RuleMatches = std::bitset<6>;

// Throws Error(NotAnNP) when np is not an internal NP node.
RuleMatches matching_rules(const Tree& tree, NodeId np, const ClassifierConfig& config);

// Rules in order: empty category, sole pronoun leaf, proper-noun head,
// definite determiner / possessive / genitive, indefinite determiner or
// cardinal, otherwise not classified.
GivennessCategory classify_np(const Tree& tree, NodeId np, const ClassifierConfig& config);

struct ClassifiedNP {
  NPOccurrence occurrence;
  GivennessCategory category;
};

std::vector<ClassifiedNP> classify_all(const Tree& tree, const std::vector<NPOccurrence>& occurrences,
                                       const ClassifierConfig& config);

}  // namespace subjscan
