#include "subjscan/treebank.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

namespace subjscan {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::EmptyConstituent: return "EmptyConstituent";
    case ErrorCode::MalformedConstituent: return "MalformedConstituent";
    case ErrorCode::NotAnNP: return "NotAnNP";
    case ErrorCode::EmptyInflectionSet: return "EmptyInflectionSet";
    case ErrorCode::DegenerateMargin: return "DegenerateMargin";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::RootNotFound: return "RootNotFound";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

// ASCII whitespace only; UTF-8 continuation bytes are never whitespace.
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<std::uint32_t> to_index(std::string_view s) {
  if (!all_digits(s)) return std::nullopt;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits "SBJ=2" into {"SBJ", "=2"}; "=2" stays whole.
void split_gap_indices(std::string_view segment, std::vector<std::string>& out) {
  std::size_t start = 0;
  while (start < segment.size()) {
    std::size_t next = segment.find('=', start + 1);
    if (next == std::string_view::npos) next = segment.size();
    out.emplace_back(segment.substr(start, next - start));
    start = next;
  }
  if (segment.empty()) out.emplace_back();
}

}  // namespace

// ---------------------------------------------------------------------------
// Tokenizer

std::vector<BracketToken> tokenize_brackets(std::string_view text) {
  std::vector<BracketToken> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '(' || c == ')') {
      tokens.push_back({c == '(' ? BracketToken::Kind::Open : BracketToken::Kind::Close,
                        text.substr(i, 1), i});
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && !is_space(text[i]) && text[i] != '(' && text[i] != ')') ++i;
      tokens.push_back({BracketToken::Kind::Atom, text.substr(start, i - start), start});
    }
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// Labels

NodeLabel NodeLabel::parse(std::string_view raw) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  bool first = true;
  while (true) {
    std::size_t dash = raw.find('-', start);
    std::string_view segment = raw.substr(start, dash == std::string_view::npos ? raw.npos : dash - start);
    if (first) {
      std::size_t eq = segment.find('=');
      pieces.emplace_back(segment.substr(0, eq));
      if (eq != std::string_view::npos) split_gap_indices(segment.substr(eq), pieces);
      first = false;
    } else {
      split_gap_indices(segment, pieces);
    }
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }

  NodeLabel label;
  label.category = std::move(pieces.front());
  if (label.category.empty()) {
    throw ParseError(ErrorCode::MalformedConstituent, 0,
                     "label '" + std::string(raw) + "' has no category");
  }
  // A trailing plain numeric segment is the coindex.
  if (pieces.size() > 1 && !pieces.back().empty() && pieces.back().front() != '=') {
    if (auto index = to_index(pieces.back())) {
      label.coindex = index;
      pieces.pop_back();
    }
  }
  label.function_tags.assign(std::make_move_iterator(pieces.begin() + 1),
                             std::make_move_iterator(pieces.end()));
  return label;
}

std::string NodeLabel::str() const {
  std::string out = category;
  for (const auto& tag : function_tags) {
    if (tag.empty() || tag.front() != '=') out += '-';
    out += tag;
  }
  if (coindex) {
    out += '-';
    out += std::to_string(*coindex);
  }
  return out;
}

bool NodeLabel::has_tag(std::string_view tag) const {
  return std::find(function_tags.begin(), function_tags.end(), tag) != function_tags.end();
}

// ---------------------------------------------------------------------------
// Tree

std::string_view Tree::category(NodeId id) const {
  const Node& n = node(id);
  return n.is_leaf() ? std::string_view{} : std::string_view{n.label.category};
}

std::vector<std::string> Tree::tokens() const { return tokens(root()); }

std::vector<std::string> Tree::tokens(NodeId id) const {
  std::vector<std::string> out;
  const LeafRange range = node(id).leaves;
  for (std::size_t i = range.begin; i < range.end; ++i) out.push_back(node(leaf_ids_[i]).token);
  return out;
}

std::string Tree::text(NodeId id) const {
  std::string out;
  const LeafRange range = node(id).leaves;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    const Node& leaf = node(leaf_ids_[i]);
    if (leaf.pos == kEmptyTag) continue;
    if (!out.empty()) out += ' ';
    out += leaf.token;
  }
  return out;
}

Tree Tree::leaf(std::string pos, std::string token) {
  TreeBuilder builder;
  builder.add_leaf(std::move(pos), std::move(token));
  return builder.finish();
}

Tree Tree::internal(NodeLabel label, std::vector<Tree> children) {
  TreeBuilder builder;
  builder.open(std::move(label));
  for (const auto& child : children) builder.add_subtree(child, child.root());
  builder.close();
  return builder.finish();
}

Tree Tree::subtree(NodeId id) const {
  TreeBuilder builder;
  builder.add_subtree(*this, id);
  return builder.finish();
}

bool operator==(const Tree& a, const Tree& b) {
  return a.nodes_ == b.nodes_;
}

// ---------------------------------------------------------------------------
// TreeBuilder

NodeId TreeBuilder::push(Tree::Node node) {
  if (tree_.nodes_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::MalformedConstituent, "tree too large");
  }
  NodeId id{static_cast<std::uint32_t>(tree_.nodes_.size())};
  if (!open_.empty()) {
    Tree::Node& parent = tree_.nodes_[open_.back().value];
    node.parent = open_.back();
    node.child_index = parent.children.size();
    parent.children.push_back(id);
  } else if (!tree_.nodes_.empty()) {
    throw Error(ErrorCode::MalformedConstituent, "tree has more than one root");
  }
  tree_.nodes_.push_back(std::move(node));
  return id;
}

void TreeBuilder::open(NodeLabel label) {
  Tree::Node node;
  node.label = std::move(label);
  node.leaves = {tree_.leaf_ids_.size(), tree_.leaf_ids_.size()};
  open_.push_back(push(std::move(node)));
}

void TreeBuilder::add_leaf(std::string pos, std::string token) {
  Tree::Node node;
  node.pos = std::move(pos);
  node.token = std::move(token);
  std::size_t index = tree_.leaf_ids_.size();
  node.leaves = {index, index + 1};
  tree_.leaf_ids_.push_back(push(std::move(node)));
}

void TreeBuilder::add_subtree(const Tree& tree, NodeId id) {
  const Tree::Node& source = tree.node(id);
  if (source.is_leaf()) {
    add_leaf(source.pos, source.token);
    return;
  }
  open(source.label);
  for (NodeId child : source.children) add_subtree(tree, child);
  close();
}

void TreeBuilder::close() {
  if (open_.empty()) throw Error(ErrorCode::UnbalancedBrackets, "close without open");
  Tree::Node& node = tree_.nodes_[open_.back().value];
  if (node.children.empty()) {
    throw Error(ErrorCode::EmptyConstituent, "constituent '" + node.label.str() + "' has no children");
  }
  node.leaves.end = tree_.leaf_ids_.size();
  open_.pop_back();
}

Tree TreeBuilder::finish() {
  if (!open_.empty()) throw Error(ErrorCode::UnbalancedBrackets, "unclosed constituent");
  if (tree_.nodes_.empty()) throw Error(ErrorCode::EmptyConstituent, "empty tree");
  Tree out = std::move(tree_);
  tree_ = Tree{};
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using Kind = BracketToken::Kind;

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : tokens_(tokenize_brackets(text)), options_(options) {}

  std::vector<Tree> run() {
    std::vector<Tree> out;
    while (pos_ < tokens_.size()) {
      const BracketToken& t = tokens_[pos_];
      if (t.kind == Kind::Atom) {
        ++pos_;  // stray text between sentences
      } else if (t.kind == Kind::Close) {
        throw ParseError(ErrorCode::UnbalancedBrackets, t.offset, "unmatched ')'");
      } else if (peek_kind(pos_ + 1) == Kind::Open) {
        if (options_.dialect == Dialect::Unwrapped) {
          throw ParseError(ErrorCode::MalformedConstituent, t.offset, "unexpected unlabeled wrapper");
        }
        parse_wrapper(out);
      } else {
        if (options_.dialect == Dialect::Wrapped && peek_kind(pos_ + 1) == Kind::Atom) {
          throw ParseError(ErrorCode::MalformedConstituent, t.offset, "missing unlabeled wrapper");
        }
        out.push_back(parse_constituent());
      }
    }
    return out;
  }

 private:
  std::vector<BracketToken> tokens_;
  ParseOptions options_;
  std::size_t pos_ = 0;

  std::optional<Kind> peek_kind(std::size_t i) const {
    if (i >= tokens_.size()) return std::nullopt;
    return tokens_[i].kind;
  }

  const BracketToken& expect_token(std::size_t i, std::size_t open_offset) const {
    if (i >= tokens_.size()) {
      throw ParseError(ErrorCode::UnbalancedBrackets, open_offset, "unclosed '('");
    }
    return tokens_[i];
  }

  void parse_wrapper(std::vector<Tree>& out) {
    const std::size_t open_offset = tokens_[pos_].offset;
    ++pos_;
    bool any = false;
    while (true) {
      const BracketToken& t = expect_token(pos_, open_offset);
      if (t.kind == Kind::Close) {
        ++pos_;
        break;
      }
      if (t.kind == Kind::Atom) {
        throw ParseError(ErrorCode::MalformedConstituent, t.offset,
                         "unexpected token '" + std::string(t.text) + "' in wrapper");
      }
      out.push_back(parse_constituent());
      any = true;
    }
    if (!any) throw ParseError(ErrorCode::EmptyConstituent, open_offset, "empty constituent");
  }

  // pos_ points at an Open token; consumes through its matching Close.
  Tree parse_constituent() {
    TreeBuilder builder;
    const std::size_t sentence_offset = tokens_[pos_].offset;
    do {
      const BracketToken& t = expect_token(pos_, sentence_offset);
      if (t.kind == Kind::Close) {
        builder.close();
        ++pos_;
        continue;
      }
      if (t.kind == Kind::Atom) {
        throw ParseError(ErrorCode::MalformedConstituent, t.offset,
                         "unexpected token '" + std::string(t.text) + "' among constituents");
      }
      const BracketToken& label = expect_token(pos_ + 1, sentence_offset);
      if (label.kind == Kind::Close) {
        throw ParseError(ErrorCode::EmptyConstituent, t.offset, "empty constituent");
      }
      if (label.kind == Kind::Open) {
        throw ParseError(ErrorCode::MalformedConstituent, t.offset, "unlabeled constituent");
      }
      const BracketToken& after = expect_token(pos_ + 2, sentence_offset);
      if (after.kind == Kind::Close) {
        throw ParseError(ErrorCode::EmptyConstituent, t.offset,
                         "constituent '" + std::string(label.text) + "' is empty");
      }
      if (after.kind == Kind::Atom) {
        const BracketToken& end = expect_token(pos_ + 3, sentence_offset);
        if (end.kind != Kind::Close) {
          throw ParseError(ErrorCode::MalformedConstituent, end.offset,
                           "preterminal '" + std::string(label.text) + "' has more than one token");
        }
        builder.add_leaf(std::string(label.text), std::string(after.text));
        pos_ += 4;
        continue;
      }
      NodeLabel parsed;
      try {
        parsed = NodeLabel::parse(label.text);
      } catch (const ParseError&) {
        throw ParseError(ErrorCode::MalformedConstituent, label.offset,
                         "label '" + std::string(label.text) + "' has no category");
      }
      builder.open(std::move(parsed));
      pos_ += 2;
    } while (builder.depth() > 0);
    return builder.finish();
  }
};

void serialize_into(const Tree& tree, NodeId id, std::string& out) {
  const Tree::Node& node = tree.node(id);
  out += '(';
  if (node.is_leaf()) {
    out += node.pos;
    out += ' ';
    out += node.token;
  } else {
    out += node.label.str();
    for (NodeId child : node.children) {
      out += ' ';
      serialize_into(tree, child, out);
    }
  }
  out += ')';
}

}  // namespace

std::vector<Tree> parse_trees(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

Tree parse_tree(std::string_view text) {
  auto trees = parse_trees(text);
  if (trees.size() != 1) {
    throw ParseError(ErrorCode::MalformedConstituent, 0,
                     "expected one tree, found " + std::to_string(trees.size()));
  }
  return std::move(trees.front());
}

std::string serialize_tree(const Tree& tree) { return serialize_tree(tree, tree.root()); }

std::string serialize_tree(const Tree& tree, NodeId id) {
  std::string out;
  serialize_into(tree, id, out);
  return out;
}

// ---------------------------------------------------------------------------
// Leaf helpers

bool PunctuationTags::contains(std::string_view pos) const {
  static constexpr std::array<std::string_view, 7> kMarks = {",", ".", ":", "``", "''", "-LRB-", "-RRB-"};
  if (std::find(kMarks.begin(), kMarks.end(), pos) != kMarks.end()) return true;
  return include_currency && (pos == "$" || pos == "#");
}

bool is_punctuation(const Tree& tree, NodeId leaf, const PunctuationTags& tags) {
  const Tree::Node& node = tree.node(leaf);
  return node.is_leaf() && tags.contains(node.pos);
}

bool is_empty_leaf(const Tree& tree, NodeId leaf) {
  const Tree::Node& node = tree.node(leaf);
  return node.is_leaf() && node.pos == kEmptyTag;
}

bool is_empty_category(const Tree& tree, NodeId id) {
  const LeafRange range = tree.node(id).leaves;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (!is_empty_leaf(tree, tree.leaf_at(i))) return false;
  }
  return true;
}

}  // namespace subjscan
