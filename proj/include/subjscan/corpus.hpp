#pragma once

// Directory ingestion and per-file parallel processing with a deterministic,
// file-ordered reduction.

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "subjscan/aggregate.hpp"
#include "subjscan/treebank.hpp"

namespace subjscan {

struct CorpusSource {
  std::filesystem::path root_path;
  std::string include_glob = "*";  // fnmatch pattern over the relative path
  Dialect dialect = Dialect::Auto;
};

struct Diagnostic {
  std::string file_id;
  std::optional<std::size_t> offset;
  std::string message;

  std::string str() const;  // "file:offset: message"
};

using DiagnosticSink = std::function<void(const Diagnostic&)>;

struct IngestStats {
  std::uint64_t files_processed = 0;
  std::uint64_t files_skipped = 0;
  std::uint64_t sentences = 0;

  bool all_failed() const { return files_processed == 0 && files_skipped > 0; }
};

// Files under root matching the glob, sorted by relative path. A root that is
// a regular file yields just that file. Throws Error(RootNotFound).
std::vector<std::filesystem::path> list_corpus_files(const CorpusSource& source);

// Identifier of a file in reports: its path relative to the corpus root.
std::string file_id_for(const CorpusSource& source, const std::filesystem::path& file);

struct ParsedFile {
  std::string file_id;
  std::vector<Tree> trees;
  std::optional<Diagnostic> error;  // set when the file could not be parsed
};

ParsedFile load_file(const CorpusSource& source, const std::filesystem::path& file);

using SentenceVisitor = std::function<void(const std::string& file_id, std::size_t sentence_index,
                                           const Tree& tree)>;

// Visits every sentence in file order; only one file is held in memory.
// Unparsable files are reported to the sink and skipped.
IngestStats ingest(const CorpusSource& source, const SentenceVisitor& visit,
                   const DiagnosticSink& diagnostics = {});

// Runs body(i) for i in [0, count) on up to `jobs` threads (0 = hardware).
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

template <typename R>
struct PerFileResults {
  std::vector<std::string> file_ids;  // parsed files only, in file order
  std::vector<R> results;             // parallel to file_ids
  IngestStats stats;
  std::vector<Diagnostic> diagnostics;
};

// Applies fn(file_id, trees) to every parsable file concurrently and returns
// the results in file order, so any fold over them is schedule-independent.
template <typename Fn>
auto map_files(const CorpusSource& source, Fn fn, unsigned jobs = 0)
    -> PerFileResults<std::invoke_result_t<Fn&, const std::string&, std::span<const Tree>>> {
  using R = std::invoke_result_t<Fn&, const std::string&, std::span<const Tree>>;
  const auto files = list_corpus_files(source);

  struct Slot {
    std::optional<R> result;
    std::string file_id;
    std::optional<Diagnostic> error;
    std::size_t sentences = 0;
  };
  std::vector<Slot> slots(files.size());
  parallel_for(files.size(), jobs, [&](std::size_t i) {
    ParsedFile parsed = load_file(source, files[i]);
    slots[i].file_id = parsed.file_id;
    if (parsed.error) {
      slots[i].error = std::move(parsed.error);
      return;
    }
    slots[i].sentences = parsed.trees.size();
    slots[i].result.emplace(fn(parsed.file_id, std::span<const Tree>(parsed.trees)));
  });

  PerFileResults<R> out;
  for (auto& slot : slots) {
    if (slot.error) {
      ++out.stats.files_skipped;
      out.diagnostics.push_back(std::move(*slot.error));
      continue;
    }
    ++out.stats.files_processed;
    out.stats.sentences += slot.sentences;
    out.file_ids.push_back(std::move(slot.file_id));
    out.results.push_back(std::move(*slot.result));
  }
  return out;
}

// Parallel aggregation over a corpus directory. Diagnostics are emitted in
// file order after processing.
AggregateCounts aggregate_corpus(const CorpusSource& source, const ClassifierConfig& config,
                                 unsigned jobs = 0, const DiagnosticSink& diagnostics = {});

}  // namespace subjscan
