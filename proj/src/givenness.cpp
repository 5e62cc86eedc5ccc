#include "subjscan/givenness.hpp"

#include <algorithm>

namespace subjscan {

std::string_view to_string(GivennessCategory category) {
  switch (category) {
    case GivennessCategory::EmptyCategory: return "empty-category";
    case GivennessCategory::Pronoun: return "pronoun";
    case GivennessCategory::ProperName: return "proper-name";
    case GivennessCategory::Definite: return "definite";
    case GivennessCategory::Indefinite: return "indefinite";
    case GivennessCategory::NotClassified: return "not-classified";
  }
  return "not-classified";
}

std::optional<GivennessCategory> category_from_string(std::string_view name) {
  for (auto c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

void ClassifierConfig::validate() {
  auto fold = [](TagSet& set) {
    TagSet folded;
    for (const auto& s : set) folded.insert(lowercase(s));
    set = std::move(folded);
  };
  fold(definite_determiners);
  fold(indefinite_determiners);

  std::vector<std::string> shared;
  std::set_intersection(definite_determiners.begin(), definite_determiners.end(),
                        indefinite_determiners.begin(), indefinite_determiners.end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    std::string list;
    for (const auto& s : shared) list += (list.empty() ? "" : ", ") + s;
    throw Error(ErrorCode::ConfigError, "determiner sets overlap: " + list);
  }
}

namespace {

std::size_t rule_index(GivennessCategory c) { return static_cast<std::size_t>(c); }

std::optional<NodeId> head_leaf(const Tree& tree, NodeId np) {
  auto children = tree.children(np);
  for (auto it = children.rbegin(); it != children.rend(); ++it) {
    if (tree.is_leaf(*it) && !is_punctuation(tree, *it) && !is_empty_leaf(tree, *it)) return *it;
  }
  return std::nullopt;
}

bool is_genitive_np(const Tree& tree, NodeId node) {
  if (tree.category(node) != "NP") return false;
  auto last = last_overt_leaf(tree, node);
  return last && tree.node(tree.leaf_at(*last)).pos == "POS";
}

}  // namespace

RuleMatches matching_rules(const Tree& tree, NodeId np, const ClassifierConfig& config) {
  if (tree.category(np) != "NP") {
    throw Error(ErrorCode::NotAnNP, "expected an NP node, got '" + serialize_tree(tree, np) + "'");
  }
  RuleMatches matches;

  std::vector<NodeId> overt;
  const LeafRange range = tree.node(np).leaves;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (!is_empty_leaf(tree, tree.leaf_at(i))) overt.push_back(tree.leaf_at(i));
  }

  if (overt.empty()) {
    matches.set(rule_index(GivennessCategory::EmptyCategory));
    matches.set(rule_index(GivennessCategory::NotClassified));
    return matches;
  }

  const auto& first = tree.node(overt.front());
  const std::string first_token = lowercase(first.token);

  if (overt.size() == 1 && config.pronoun_pos_tags.count(first.pos)) {
    matches.set(rule_index(GivennessCategory::Pronoun));
  }
  if (auto head = head_leaf(tree, np); head && config.proper_pos_tags.count(tree.node(*head).pos)) {
    matches.set(rule_index(GivennessCategory::ProperName));
  }
  if (config.definite_determiners.count(first_token) || first.pos == "PRP$" ||
      is_genitive_np(tree, tree.children(np).front())) {
    matches.set(rule_index(GivennessCategory::Definite));
  }
  if (config.indefinite_determiners.count(first_token) || first.pos == "CD") {
    matches.set(rule_index(GivennessCategory::Indefinite));
  }
  matches.set(rule_index(GivennessCategory::NotClassified));
  return matches;
}

GivennessCategory classify_np(const Tree& tree, NodeId np, const ClassifierConfig& config) {
  const RuleMatches matches = matching_rules(tree, np, config);
  for (auto category : kAllCategories) {
    if (matches.test(rule_index(category))) return category;
  }
  return GivennessCategory::NotClassified;
}

std::vector<ClassifiedNP> classify_all(const Tree& tree, const std::vector<NPOccurrence>& occurrences,
                                       const ClassifierConfig& config) {
  std::vector<ClassifiedNP> out;
  out.reserve(occurrences.size());
  for (const auto& occurrence : occurrences) {
    out.push_back({occurrence, classify_np(tree, occurrence.node, config)});
  }
  return out;
}

}  // namespace subjscan
