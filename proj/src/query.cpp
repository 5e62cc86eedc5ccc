#include "subjscan/query.hpp"

#include <algorithm>
#include <cctype>

namespace subjscan {

std::string_view to_string(GrammaticalPosition position) {
  return position == GrammaticalPosition::Subject ? "subject" : "non-subject";
}

std::string_view to_string(ClauseContext context) {
  switch (context) {
    case ClauseContext::Matrix: return "matrix";
    case ClauseContext::EmbeddedTC: return "tc";
    case ClauseContext::EmbeddedRC: return "rc";
    case ClauseContext::EmbeddedOther: return "other";
  }
  return "other";
}

std::optional<GrammaticalPosition> position_from_string(std::string_view name) {
  for (auto p : kAllPositions) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<ClauseContext> context_from_string(std::string_view name) {
  for (auto c : kAllContexts) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(VerbFrame frame) {
  switch (frame) {
    case VerbFrame::NPComplement: return "np";
    case VerbFrame::ThatClause: return "tc";
    case VerbFrame::ReducedClause: return "rc";
    case VerbFrame::Intransitive: return "intransitive";
  }
  return "intransitive";
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

SourceSpan make_span(const SentenceRef& sentence, LeafRange range) {
  return SourceSpan{sentence.file_id, sentence.sentence_index, range};
}

// ---------------------------------------------------------------------------
// Leaf navigation

std::optional<std::size_t> first_overt_leaf(const Tree& tree, NodeId id) {
  const LeafRange range = tree.node(id).leaves;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (!is_empty_leaf(tree, tree.leaf_at(i))) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> last_overt_leaf(const Tree& tree, NodeId id) {
  const LeafRange range = tree.node(id).leaves;
  for (std::size_t i = range.end; i > range.begin; --i) {
    if (!is_empty_leaf(tree, tree.leaf_at(i - 1))) return i - 1;
  }
  return std::nullopt;
}

std::optional<std::size_t> next_overt_leaf(const Tree& tree, std::size_t leaf) {
  for (std::size_t i = leaf + 1; i < tree.leaf_count(); ++i) {
    if (!is_empty_leaf(tree, tree.leaf_at(i))) return i;
  }
  return std::nullopt;
}

namespace {

bool has_later_sibling(const Tree& tree, NodeId node, std::string_view category) {
  auto parent = tree.parent(node);
  if (!parent) return false;
  auto siblings = tree.children(*parent);
  for (std::size_t i = tree.node(node).child_index + 1; i < siblings.size(); ++i) {
    if (tree.category(siblings[i]) == category) return true;
  }
  return false;
}

bool has_clause_ancestor(const Tree& tree, NodeId node) {
  for (auto a = tree.parent(node); a; a = tree.parent(*a)) {
    auto cat = tree.category(*a);
    if (cat == "S" || cat == "SBAR") return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// NP position and clause context

std::optional<GrammaticalPosition> np_position(const Tree& tree, NodeId np) {
  if (tree.category(np) != "NP") return std::nullopt;
  auto parent = tree.parent(np);
  if (!parent) return std::nullopt;
  auto parent_category = tree.category(*parent);
  if (parent_category == "VP") return GrammaticalPosition::NonSubject;
  if (parent_category == "S") {
    return has_later_sibling(tree, np, "VP") ? GrammaticalPosition::Subject
                                             : GrammaticalPosition::NonSubject;
  }
  return std::nullopt;
}

std::optional<NodeId> governing_clause(const Tree& tree, NodeId np) {
  for (auto a = tree.parent(np); a; a = tree.parent(*a)) {
    if (tree.category(*a) == "S") return a;
  }
  return std::nullopt;
}

std::optional<NodeId> complementizer_of(const Tree& tree, NodeId sbar) {
  auto children = tree.children(sbar);
  for (std::size_t i = 1; i < children.size(); ++i) {
    if (tree.category(children[i]) == "S") {
      if (tree.is_leaf(children[i - 1])) return children[i - 1];
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool has_that_complementizer(const Tree& tree, NodeId sbar) {
  auto comp = complementizer_of(tree, sbar);
  if (!comp) return false;
  const auto& leaf = tree.node(*comp);
  return leaf.pos == "IN" && lowercase(leaf.token) == "that";
}

bool has_empty_complementizer(const Tree& tree, NodeId sbar) {
  auto comp = complementizer_of(tree, sbar);
  return comp && is_empty_leaf(tree, *comp);
}

ClauseContext clause_context_of(const Tree& tree, NodeId np) {
  auto clause = governing_clause(tree, np);
  if (!clause) {
    return has_clause_ancestor(tree, np) ? ClauseContext::EmbeddedOther : ClauseContext::Matrix;
  }
  if (!has_clause_ancestor(tree, *clause)) return ClauseContext::Matrix;

  auto parent = tree.parent(*clause);
  if (tree.category(*parent) == "VP") return ClauseContext::EmbeddedRC;
  if (tree.category(*parent) == "SBAR") {
    auto grandparent = tree.parent(*parent);
    if (grandparent && tree.category(*grandparent) == "VP") {
      if (has_that_complementizer(tree, *parent)) return ClauseContext::EmbeddedTC;
      if (has_empty_complementizer(tree, *parent)) return ClauseContext::EmbeddedRC;
    }
  }
  return ClauseContext::EmbeddedOther;
}

ClauseContext clause_context_of(const NPOccurrence& np, const Tree& tree) {
  return clause_context_of(tree, np.node);
}

std::vector<NPOccurrence> extract_np_occurrences(const Tree& tree, const SentenceRef& sentence) {
  std::vector<NPOccurrence> out;
  for (std::uint32_t i = 0; i < tree.size(); ++i) {
    NodeId id{i};
    auto position = np_position(tree, id);
    if (!position) continue;
    out.push_back({id, *position, clause_context_of(tree, id),
                   make_span(sentence, tree.node(id).leaves)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Late closure

bool is_verb_tag(std::string_view pos) {
  return pos == "VB" || pos == "VBD" || pos == "VBG" || pos == "VBN" || pos == "VBP" ||
         pos == "VBZ";
}

std::vector<LateClosureMatch> find_late_closure_configs(const Tree& tree,
                                                        const SentenceRef& sentence,
                                                        const LateClosureOptions& options) {
  std::vector<LateClosureMatch> out;
  std::set<std::size_t> seen_verbs;
  // Preorder visits outer VPs before the VPs they contain.
  for (std::uint32_t i = 0; i < tree.size(); ++i) {
    NodeId vp{i};
    if (tree.category(vp) != "VP") continue;

    const LeafRange range = tree.node(vp).leaves;
    std::optional<std::size_t> final_leaf;
    for (std::size_t l = range.end; l > range.begin; --l) {
      NodeId leaf = tree.leaf_at(l - 1);
      if (is_empty_leaf(tree, leaf) || is_punctuation(tree, leaf, options.punctuation)) continue;
      final_leaf = l - 1;
      break;
    }
    if (!final_leaf || !is_verb_tag(tree.node(tree.leaf_at(*final_leaf)).pos)) continue;
    if (seen_verbs.count(*final_leaf)) continue;

    auto next = next_overt_leaf(tree, *final_leaf);
    if (!next) continue;
    NodeId next_leaf = tree.leaf_at(*next);
    if (is_punctuation(tree, next_leaf, options.punctuation)) continue;

    std::optional<NodeId> critical;
    for (auto a = tree.parent(next_leaf); a; a = tree.parent(*a)) {
      if (first_overt_leaf(tree, *a) != next) break;
      if (tree.category(*a) == "NP") critical = a;
    }
    if (!critical) continue;

    seen_verbs.insert(*final_leaf);
    NodeId verb = tree.leaf_at(*final_leaf);
    out.push_back({vp, verb, tree.node(verb).token, tree.node(verb).pos, *critical,
                   make_span(sentence, {*final_leaf, tree.node(*critical).leaves.end})});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fronted adverbials

namespace {

std::optional<std::size_t> first_word_leaf(const Tree& tree, NodeId id) {
  const LeafRange range = tree.node(id).leaves;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    NodeId leaf = tree.leaf_at(i);
    if (!is_empty_leaf(tree, leaf) && !is_punctuation(tree, leaf)) return i;
  }
  return std::nullopt;
}

bool has_overt_subject(const Tree& tree, NodeId clause) {
  for (NodeId child : tree.children(clause)) {
    if (tree.category(child) == "NP" && !is_empty_category(tree, child)) return true;
  }
  return false;
}

}  // namespace

std::vector<AdverbialRecord> survey_fronted_adverbials(const Tree& tree,
                                                       const SentenceRef& sentence,
                                                       const AdverbialOptions& options) {
  std::vector<AdverbialRecord> out;
  NodeId root = tree.root();
  if (tree.category(root) != "S") return out;

  auto children = tree.children(root);
  std::optional<std::size_t> subject;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (np_position(tree, children[i]) == GrammaticalPosition::Subject) {
      subject = i;
      break;
    }
  }
  if (!subject) return out;

  const auto sentence_start = first_word_leaf(tree, root);
  for (std::size_t i = 0; i < *subject; ++i) {
    NodeId child = children[i];
    if (tree.is_leaf(child)) continue;
    const std::string& category = tree.node(child).label.category;
    if (!options.categories.count(category)) continue;
    if (category == "S" && has_overt_subject(tree, child)) continue;

    AdverbialRecord record;
    record.category = category;
    record.node = child;
    record.span = make_span(sentence, tree.node(child).leaves);
    if (auto last = last_overt_leaf(tree, child)) {
      if (auto next = next_overt_leaf(tree, *last)) {
        record.comma_delimited = tree.node(tree.leaf_at(*next)).pos == ",";
      }
    }
    auto start = first_word_leaf(tree, child);
    record.sentence_initial = start && start == sentence_start;
    out.push_back(std::move(record));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verb frames

std::uint64_t VerbFrameProfile::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

void VerbFrameProfile::merge(const VerbFrameProfile& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

VerbFrame classify_verb_frame(const Tree& tree, NodeId verb_leaf) {
  auto parent = tree.parent(verb_leaf);
  if (!parent) return VerbFrame::Intransitive;
  auto siblings = tree.children(*parent);
  auto following = siblings.subspan(tree.node(verb_leaf).child_index + 1);

  auto any = [&](auto&& predicate) {
    return std::any_of(following.begin(), following.end(), predicate);
  };
  if (any([&](NodeId s) { return tree.category(s) == "NP"; })) return VerbFrame::NPComplement;
  if (any([&](NodeId s) {
        return tree.category(s) == "SBAR" && has_that_complementizer(tree, s);
      })) {
    return VerbFrame::ThatClause;
  }
  if (any([&](NodeId s) {
        return tree.category(s) == "S" ||
               (tree.category(s) == "SBAR" && has_empty_complementizer(tree, s));
      })) {
    return VerbFrame::ReducedClause;
  }
  return VerbFrame::Intransitive;
}

std::vector<NodeId> find_verb_occurrences(const Tree& tree, const InflectionSet& inflections) {
  std::vector<NodeId> out;
  for (NodeId leaf : tree.leaves()) {
    const auto& node = tree.node(leaf);
    if (is_verb_tag(node.pos) && inflections.count(lowercase(node.token))) out.push_back(leaf);
  }
  return out;
}

void accumulate_verb_frames(VerbFrameProfile& profile, const Tree& tree,
                            const InflectionSet& inflections) {
  if (inflections.empty()) {
    throw Error(ErrorCode::EmptyInflectionSet,
                "no inflections configured for verb '" + profile.lemma + "'");
  }
  for (NodeId leaf : find_verb_occurrences(tree, inflections)) {
    profile.add(classify_verb_frame(tree, leaf));
  }
}

VerbFrameProfile profile_verb_frames(std::span<const Tree> trees, std::string lemma,
                                     const InflectionSet& inflections) {
  VerbFrameProfile profile;
  profile.lemma = std::move(lemma);
  if (inflections.empty()) {
    throw Error(ErrorCode::EmptyInflectionSet,
                "no inflections configured for verb '" + profile.lemma + "'");
  }
  for (const Tree& tree : trees) accumulate_verb_frames(profile, tree, inflections);
  return profile;
}

// ---------------------------------------------------------------------------
// -SBJ cross-check

double SubjectTagAgreement::disagreement_rate() const {
  const std::uint64_t total = both + positional_only + tag_only;
  return total == 0 ? 0.0 : static_cast<double>(disagreements()) / static_cast<double>(total);
}

void SubjectTagAgreement::merge(const SubjectTagAgreement& other) {
  both += other.both;
  positional_only += other.positional_only;
  tag_only += other.tag_only;
}

SubjectTagAgreement cross_check_subject_tags(const Tree& tree) {
  SubjectTagAgreement out;
  for (std::uint32_t i = 0; i < tree.size(); ++i) {
    NodeId id{i};
    if (tree.category(id) != "NP") continue;
    const bool positional = np_position(tree, id) == GrammaticalPosition::Subject;
    const bool tagged = tree.node(id).label.has_tag("SBJ");
    if (positional && tagged) {
      ++out.both;
    } else if (positional) {
      ++out.positional_only;
    } else if (tagged) {
      ++out.tag_only;
    }
  }
  return out;
}

}  // namespace subjscan
