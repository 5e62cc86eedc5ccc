#pragma once

// Helpers shared by the test binaries: fixture access, a seeded random tree
// generator, an NP-position oracle that works on bracketed text with its own
// reader, and a leaf-level re-check of late-closure matches.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "subjscan/query.hpp"
#include "subjscan/treebank.hpp"

namespace testsupport {

std::filesystem::path fixture(const std::string& relative);
std::string read_file(const std::filesystem::path& path);
std::vector<subjscan::Tree> load_trees(const std::string& relative);

// Tab-separated fixture sidecar; lines starting with '#' are skipped.
std::vector<std::vector<std::string>> read_tsv(const std::string& relative);

struct GeneratorOptions {
  std::size_t max_nodes = 25;
  bool decorate_labels = true;  // function tags, coindices, "=n" gaps
};

// Random tree over {S, SBAR, VP, NP, PP, ADVP} with POS/token leaves,
// including empty categories and punctuation.
subjscan::Tree random_tree(std::mt19937_64& rng, const GeneratorOptions& options = {});

// (preorder node index, position) for every NP meeting either definition,
// computed from the serialized text alone.
using OracleNP = std::pair<std::size_t, subjscan::GrammaticalPosition>;
std::vector<OracleNP> oracle_np_positions(const std::string& bracketed);

// Returns an empty string when the match holds on the leaf sequence,
// otherwise what failed.
std::string recheck_late_closure(const subjscan::Tree& tree, const subjscan::LateClosureMatch& m);

// Copy of tree with a new leaf inserted right after the given leaf, under the
// same parent.
subjscan::Tree insert_leaf_after(const subjscan::Tree& tree, subjscan::NodeId leaf,
                                 const std::string& pos, const std::string& token);

// A temporary directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  void write(const std::string& relative, const std::string& text) const;

 private:
  std::filesystem::path path_;
};

}  // namespace testsupport
