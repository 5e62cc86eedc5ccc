#include "support.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace testsupport {

using namespace subjscan;

std::filesystem::path fixture(const std::string& relative) {
  return std::filesystem::path(SUBJSCAN_FIXTURES) / relative;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<Tree> load_trees(const std::string& relative) {
  return parse_trees(read_file(fixture(relative)));
}

std::vector<std::vector<std::string>> read_tsv(const std::string& relative) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(read_file(fixture(relative)));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
      fields.push_back(line.substr(start, tab - start));
    }
    fields.push_back(line.substr(start));
    rows.push_back(std::move(fields));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Generator

namespace {

constexpr std::array<const char*, 6> kCategories = {"S", "SBAR", "VP", "NP", "PP", "ADVP"};

struct LeafKind {
  const char* pos;
  const char* token;
};

constexpr std::array<LeafKind, 18> kLeaves = {{
    {"DT", "the"}, {"DT", "a"}, {"NN", "maid"}, {"NNS", "keys"}, {"NNP", "Larson"},
    {"PRP", "it"}, {"PRP$", "her"}, {"VBD", "worked"}, {"VBZ", "seems"}, {"VB", "say"},
    {"IN", "that"}, {"IN", "after"}, {"RB", "almost"}, {"CD", "100"}, {"-NONE-", "*T*-1"},
    {"-NONE-", "0"}, {",", ","}, {".", "."},
}};

constexpr std::array<const char*, 5> kTags = {"SBJ", "TMP", "LOC", "PRD", "CLR"};

NodeLabel random_label(std::mt19937_64& rng, const char* category, bool decorate) {
  NodeLabel label;
  label.category = category;
  if (!decorate) return label;
  std::uniform_int_distribution<int> pct(0, 99);
  if (pct(rng) < 25) label.function_tags.push_back(kTags[rng() % kTags.size()]);
  if (pct(rng) < 8) label.function_tags.push_back("=" + std::to_string(1 + rng() % 3));
  if (pct(rng) < 15) label.coindex = static_cast<std::uint32_t>(rng() % 5);
  return label;
}

Tree random_leaf(std::mt19937_64& rng) {
  const auto& kind = kLeaves[rng() % kLeaves.size()];
  return Tree::leaf(kind.pos, kind.token);
}

// Grows a tree within a node budget; every internal node gets at least one
// child so the result is always well formed.
Tree grow(std::mt19937_64& rng, std::size_t& budget, int depth, bool decorate) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (budget <= 2 || depth > 6 || pct(rng) < 30 + depth * 8) {
    --budget;
    return random_leaf(rng);
  }
  --budget;
  NodeLabel label = random_label(rng, kCategories[rng() % kCategories.size()], decorate);
  const std::size_t want = 1 + rng() % 4;
  std::vector<Tree> children;
  for (std::size_t i = 0; i < want && budget > 0; ++i) children.push_back(grow(rng, budget, depth + 1, decorate));
  if (children.empty()) children.push_back(random_leaf(rng));
  return Tree::internal(std::move(label), std::move(children));
}

}  // namespace

Tree random_tree(std::mt19937_64& rng, const GeneratorOptions& options) {
  std::size_t budget = options.max_nodes - 1;
  NodeLabel root;
  root.category = "S";
  std::vector<Tree> children;
  const std::size_t want = 1 + rng() % 4;
  for (std::size_t i = 0; i < want && budget > 0; ++i) {
    children.push_back(grow(rng, budget, 1, options.decorate_labels));
  }
  return Tree::internal(std::move(root), std::move(children));
}

// ---------------------------------------------------------------------------
// NP oracle. Reads the text with a small recursive reader of its own and
// applies the two definitions to every NP node.

namespace {

struct RawNode {
  std::string label;  // full label for internal nodes, POS for leaves
  bool leaf = false;
  std::size_t preorder = 0;
  std::vector<RawNode> kids;
};

class RawReader {
 public:
  explicit RawReader(const std::string& text) : text_(text) {}

  std::vector<RawNode> read_all() {
    std::vector<RawNode> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read_node());
      skip_space();
    }
    return out;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t counter_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw std::runtime_error("oracle reader: bad text");
    ++pos_;
  }

  RawNode read_node() {
    expect('(');
    RawNode node;
    node.preorder = counter_++;
    node.label = word();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] != '(') {
      node.leaf = true;
      word();
      expect(')');
      return node;
    }
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') break;
      node.kids.push_back(read_node());
    }
    expect(')');
    return node;
  }
};

// Category: the label up to the first '-' or '='.
std::string category_of(const RawNode& n) {
  if (n.leaf) return "";
  return n.label.substr(0, n.label.find_first_of("-="));
}

void visit(const RawNode& parent, std::vector<OracleNP>& out) {
  const std::string pc = category_of(parent);
  for (std::size_t i = 0; i < parent.kids.size(); ++i) {
    const RawNode& kid = parent.kids[i];
    if (category_of(kid) == "NP") {
      bool later_vp = false;
      for (std::size_t j = i + 1; j < parent.kids.size(); ++j) {
        if (category_of(parent.kids[j]) == "VP") later_vp = true;
      }
      if (pc == "S" && later_vp) {
        out.emplace_back(kid.preorder, GrammaticalPosition::Subject);
      } else if (pc == "VP" || (pc == "S" && !later_vp)) {
        out.emplace_back(kid.preorder, GrammaticalPosition::NonSubject);
      }
    }
    visit(kid, out);
  }
}

}  // namespace

std::vector<OracleNP> oracle_np_positions(const std::string& bracketed) {
  RawReader reader(bracketed);
  auto roots = reader.read_all();
  if (roots.size() != 1) throw std::runtime_error("oracle expects one tree");
  std::vector<OracleNP> out;
  visit(roots.front(), out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Late-closure re-check on the flat leaf sequence

std::string recheck_late_closure(const Tree& tree, const LateClosureMatch& m) {
  static const std::array<std::string, 6> verb_tags = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"};
  static const std::array<std::string, 9> punct = {",", ".", ":", "``", "''", "-LRB-", "-RRB-", "$", "#"};
  auto is_in = [](const auto& set, const std::string& s) {
    return std::find(set.begin(), set.end(), s) != set.end();
  };

  std::vector<std::string> pos, tok;
  for (NodeId id : tree.leaves()) {
    pos.push_back(tree.node(id).pos);
    tok.push_back(tree.node(id).token);
  }
  // Leaf index of the verb.
  std::size_t v = pos.size();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (tree.leaf_at(i) == m.final_verb) v = i;
  }
  if (v == pos.size()) return "final verb is not a leaf";
  if (!is_in(verb_tags, pos[v])) return "final verb tag " + pos[v] + " is not a verb tag";
  if (tok[v] != m.verb_token || pos[v] != m.verb_pos) return "recorded verb differs from leaf";

  const LeafRange vp = tree.node(m.vp_node).leaves;
  if (tree.category(m.vp_node) != "VP") return "vp_node is not a VP";
  if (!vp.contains(v)) return "verb outside the VP";
  for (std::size_t i = v + 1; i < vp.end; ++i) {
    if (pos[i] != "-NONE-" && !is_in(punct, pos[i])) return "verb is not the VP's last overt leaf";
  }

  std::size_t next = v + 1;
  while (next < pos.size() && pos[next] == "-NONE-") ++next;
  if (next >= pos.size()) return "no leaf after the verb";
  if (is_in(punct, pos[next])) return "punctuation follows the verb";

  if (tree.category(m.critical_np) != "NP") return "critical NP is not an NP";
  const LeafRange np = tree.node(m.critical_np).leaves;
  std::size_t first = np.begin;
  while (first < np.end && pos[first] == "-NONE-") ++first;
  if (first != next) return "critical NP does not start at the next overt leaf";
  if (m.span.leaf_range.begin != v || m.span.leaf_range.end != np.end) return "span mismatch";
  return {};
}

Tree insert_leaf_after(const Tree& tree, NodeId leaf, const std::string& pos, const std::string& token) {
  TreeBuilder b;
  std::function<void(NodeId)> copy = [&](NodeId id) {
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
      b.add_leaf(n.pos, n.token);
      if (id == leaf) b.add_leaf(pos, token);
      return;
    }
    b.open(n.label);
    for (NodeId c : n.children) copy(c);
    b.close();
  };
  copy(tree.root());
  return b.finish();
}

// ---------------------------------------------------------------------------

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("subjscan-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void TempDir::write(const std::string& relative, const std::string& text) const {
  const auto p = path_ / relative;
  std::filesystem::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace testsupport
