#pragma once

// Structural queries over parsed sentences: NP grammatical position and
// clause context, late-closure configurations, fronted adverbials and verb
// subcategorization frames. All functions are pure.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subjscan/treebank.hpp"

namespace subjscan {

enum class GrammaticalPosition { Subject, NonSubject };

enum class ClauseContext { Matrix, EmbeddedTC, EmbeddedRC, EmbeddedOther };

inline constexpr std::array<GrammaticalPosition, 2> kAllPositions = {
    GrammaticalPosition::Subject, GrammaticalPosition::NonSubject};
inline constexpr std::array<ClauseContext, 4> kAllContexts = {
    ClauseContext::Matrix, ClauseContext::EmbeddedTC, ClauseContext::EmbeddedRC,
    ClauseContext::EmbeddedOther};

std::string_view to_string(GrammaticalPosition position);
std::string_view to_string(ClauseContext context);
std::optional<GrammaticalPosition> position_from_string(std::string_view name);
std::optional<ClauseContext> context_from_string(std::string_view name);

// Identifies a sentence inside a corpus.
struct SentenceRef {
  std::string file_id;
  std::size_t sentence_index = 0;
};

struct SourceSpan {
  std::string file_id;
  std::size_t sentence_index = 0;
  LeafRange leaf_range;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

SourceSpan make_span(const SentenceRef& sentence, LeafRange range);

// ---------------------------------------------------------------------------
// NP position and clause context

struct NPOccurrence {
  NodeId node;
  GrammaticalPosition position = GrammaticalPosition::Subject;
  ClauseContext context = ClauseContext::Matrix;
  SourceSpan span;
};

// Subject: NP whose parent is S with a VP among its later siblings.
// Non-subject: NP whose parent is VP, or whose parent is S with no later VP.
// Any other NP has no position.
std::optional<GrammaticalPosition> np_position(const Tree& tree, NodeId np);

// Every NP with a position, in preorder, with its clause context.
std::vector<NPOccurrence> extract_np_occurrences(const Tree& tree, const SentenceRef& sentence = {});

// The clause an NP belongs to: its parent S, or the nearest S above its VP.
std::optional<NodeId> governing_clause(const Tree& tree, NodeId np);

ClauseContext clause_context_of(const Tree& tree, NodeId np);
ClauseContext clause_context_of(const NPOccurrence& np, const Tree& tree);

// Leaf standing in the complementizer slot of an SBAR (the leaf just before
// its S child), if any.
std::optional<NodeId> complementizer_of(const Tree& tree, NodeId sbar);
bool has_that_complementizer(const Tree& tree, NodeId sbar);
bool has_empty_complementizer(const Tree& tree, NodeId sbar);

// ---------------------------------------------------------------------------
// Late closure

bool is_verb_tag(std::string_view pos);

struct LateClosureMatch {
  NodeId vp_node;
  NodeId final_verb;        // leaf
  std::string verb_token;
  std::string verb_pos;
  NodeId critical_np;
  SourceSpan span;          // from the final verb through the critical NP
};

struct LateClosureOptions {
  PunctuationTags punctuation;
};

// VPs whose last overt non-punctuation leaf is a verb and whose next overt
// leaf starts an NP, with no punctuation in between. One match per final
// verb; the outermost VP ending in that verb is reported.
std::vector<LateClosureMatch> find_late_closure_configs(const Tree& tree,
                                                        const SentenceRef& sentence = {},
                                                        const LateClosureOptions& options = {});

// ---------------------------------------------------------------------------
// Fronted adverbials

struct AdverbialRecord {
  std::string category;
  bool comma_delimited = false;
  // False for the second and later adverbials in a stacked sequence.
  bool sentence_initial = false;
  NodeId node;
  SourceSpan span;
};

struct AdverbialOptions {
  std::set<std::string, std::less<>> categories = {"PP", "SBAR", "ADVP", "S"};
};

// Adjunct children of a root S that precede its subject NP. An S child only
// qualifies when it has no overt subject (participial and infinitival
// adjuncts).
std::vector<AdverbialRecord> survey_fronted_adverbials(const Tree& tree,
                                                       const SentenceRef& sentence = {},
                                                       const AdverbialOptions& options = {});

// ---------------------------------------------------------------------------
// Verb frames

enum class VerbFrame { NPComplement, ThatClause, ReducedClause, Intransitive };

inline constexpr std::array<VerbFrame, 4> kAllFrames = {
    VerbFrame::NPComplement, VerbFrame::ThatClause, VerbFrame::ReducedClause,
    VerbFrame::Intransitive};

std::string_view to_string(VerbFrame frame);

struct VerbFrameProfile {
  std::string lemma;
  std::array<std::uint64_t, 4> counts{};

  std::uint64_t count(VerbFrame frame) const { return counts[static_cast<std::size_t>(frame)]; }
  std::uint64_t total() const;
  void add(VerbFrame frame, std::uint64_t n = 1) { counts[static_cast<std::size_t>(frame)] += n; }
  void merge(const VerbFrameProfile& other);

  friend bool operator==(const VerbFrameProfile&, const VerbFrameProfile&) = default;
};

// Lower-cased surface forms of one lemma.
using InflectionSet = std::set<std::string, std::less<>>;

// Frame of the VP headed by a verb leaf, judged from the siblings after it.
VerbFrame classify_verb_frame(const Tree& tree, NodeId verb_leaf);

// Verb-tagged leaves of the tree whose lower-cased token is in inflections.
std::vector<NodeId> find_verb_occurrences(const Tree& tree, const InflectionSet& inflections);

// Throws Error(EmptyInflectionSet) when inflections is empty.
void accumulate_verb_frames(VerbFrameProfile& profile, const Tree& tree,
                            const InflectionSet& inflections);
VerbFrameProfile profile_verb_frames(std::span<const Tree> trees, std::string lemma,
                                     const InflectionSet& inflections);

// ---------------------------------------------------------------------------
// -SBJ cross-check

// Positional subjects compared with NPs carrying the SBJ function tag.
struct SubjectTagAgreement {
  std::uint64_t both = 0;
  std::uint64_t positional_only = 0;
  std::uint64_t tag_only = 0;

  std::uint64_t disagreements() const { return positional_only + tag_only; }
  double disagreement_rate() const;
  void merge(const SubjectTagAgreement& other);

  friend bool operator==(const SubjectTagAgreement&, const SubjectTagAgreement&) = default;
};

SubjectTagAgreement cross_check_subject_tags(const Tree& tree);

// ---------------------------------------------------------------------------
// Leaf navigation shared by the queries

std::optional<std::size_t> first_overt_leaf(const Tree& tree, NodeId id);
std::optional<std::size_t> last_overt_leaf(const Tree& tree, NodeId id);
// Next leaf index after `leaf` that is not an empty category.
std::optional<std::size_t> next_overt_leaf(const Tree& tree, std::size_t leaf);

std::string lowercase(std::string_view s);

}  // namespace subjscan
