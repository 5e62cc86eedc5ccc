#pragma once

// Penn-Treebank-style bracketed trees: tokenizer, parser, serializer and an
// immutable flat tree representation shared by every query.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subjscan/error.hpp"

namespace subjscan {

// ---------------------------------------------------------------------------
// Tokenizer

struct BracketToken {
  enum class Kind { Open, Close, Atom };

  Kind kind;
  std::string_view text;  // view into the tokenized input
  std::size_t offset;     // byte offset of text in the input

  friend bool operator==(const BracketToken&, const BracketToken&) = default;
};

// Total: every byte is either whitespace or part of exactly one token.
std::vector<BracketToken> tokenize_brackets(std::string_view text);

// ---------------------------------------------------------------------------
// Labels

// A nonterminal label split at hyphens: "NP-SBJ-1" is category "NP", tags
// {"SBJ"}, coindex 1. Gap indices ("NP=2") are kept as a tag "=2".
struct NodeLabel {
  std::string category;
  std::vector<std::string> function_tags;
  std::optional<std::uint32_t> coindex;

  // Throws ParseError(MalformedConstituent) when no category can be split off.
  static NodeLabel parse(std::string_view raw);

  std::string str() const;
  bool has_tag(std::string_view tag) const;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

// ---------------------------------------------------------------------------
// Trees

struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// Half-open interval of leaf indices in surface order.
struct LeafRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  bool contains(std::size_t leaf) const { return leaf >= begin && leaf < end; }

  friend bool operator==(const LeafRange&, const LeafRange&) = default;
};

// Immutable constituency tree. Nodes live in one vector in preorder, so the
// root is always NodeId{0} and two structurally identical trees have
// identical node vectors.
class Tree {
 public:
  struct Node {
    NodeLabel label;              // internal nodes only
    std::string pos;              // leaves only
    std::string token;            // leaves only
    std::optional<NodeId> parent;
    std::vector<NodeId> children; // empty exactly for leaves
    LeafRange leaves;
    std::size_t child_index = 0;  // position among the parent's children

    bool is_leaf() const { return children.empty(); }

    friend bool operator==(const Node&, const Node&) = default;
  };

  static Tree leaf(std::string pos, std::string token);
  // Throws Error(EmptyConstituent) when children is empty.
  static Tree internal(NodeLabel label, std::vector<Tree> children);

  NodeId root() const { return NodeId{0}; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const Node> nodes() const { return nodes_; }

  const Node& node(NodeId id) const { return nodes_.at(id.value); }
  bool is_leaf(NodeId id) const { return node(id).is_leaf(); }
  // Category of an internal node; empty for leaves.
  std::string_view category(NodeId id) const;
  std::span<const NodeId> children(NodeId id) const { return node(id).children; }
  std::optional<NodeId> parent(NodeId id) const { return node(id).parent; }

  // Leaf nodes in surface order.
  std::span<const NodeId> leaves() const { return leaf_ids_; }
  NodeId leaf_at(std::size_t index) const { return leaf_ids_.at(index); }
  std::size_t leaf_count() const { return leaf_ids_.size(); }

  std::vector<std::string> tokens() const;
  std::vector<std::string> tokens(NodeId id) const;
  // Overt tokens (empty categories dropped) joined by single spaces.
  std::string text(NodeId id) const;

  Tree subtree(NodeId id) const;

  friend bool operator==(const Tree& a, const Tree& b);

 private:
  friend class TreeBuilder;

  std::vector<Node> nodes_;
  std::vector<NodeId> leaf_ids_;
};

// Appends nodes in preorder. Used by the parser and by Tree::internal.
class TreeBuilder {
 public:
  void open(NodeLabel label);
  void add_leaf(std::string pos, std::string token);
  void add_subtree(const Tree& tree, NodeId id);
  // Throws Error(EmptyConstituent) if the node being closed has no children.
  void close();

  std::size_t depth() const { return open_.size(); }
  // Requires every opened node to be closed and at least one node present.
  Tree finish();

 private:
  Tree tree_;
  std::vector<NodeId> open_;

  NodeId push(Tree::Node node);
};

// ---------------------------------------------------------------------------
// Parsing and serialization

enum class Dialect {
  Auto,       // outer unlabeled "( ... )" wrapper optional
  Wrapped,    // every sentence must carry the wrapper
  Unwrapped,  // the wrapper is rejected
};

struct ParseOptions {
  Dialect dialect = Dialect::Auto;
};

// Parses a concatenation of bracketed sentences. Text outside any bracket is
// ignored. Throws ParseError.
std::vector<Tree> parse_trees(std::string_view text, const ParseOptions& options = {});

// Parses exactly one sentence. Throws ParseError if there is not exactly one.
Tree parse_tree(std::string_view text);

std::string serialize_tree(const Tree& tree);
std::string serialize_tree(const Tree& tree, NodeId id);

// ---------------------------------------------------------------------------
// Leaf helpers

inline constexpr std::string_view kEmptyTag = "-NONE-";

struct PunctuationTags {
  bool include_currency = true;  // "$" and "#"

  bool contains(std::string_view pos) const;
};

bool is_punctuation(const Tree& tree, NodeId leaf, const PunctuationTags& tags = {});
bool is_empty_leaf(const Tree& tree, NodeId leaf);

// True iff every leaf under id is tagged -NONE-.
bool is_empty_category(const Tree& tree, NodeId id);

}  // namespace subjscan
