#include "subjscan/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace subjscan {

// ---------------------------------------------------------------------------
// AggregateCounts

std::size_t AggregateCounts::index(GivennessCategory category, GrammaticalPosition position,
                                   ClauseContext context) {
  return (static_cast<std::size_t>(category) * kPositions + static_cast<std::size_t>(position)) *
             kContexts +
         static_cast<std::size_t>(context);
}

std::uint64_t AggregateCounts::sum(GivennessCategory category, GrammaticalPosition position,
                                   std::span<const ClauseContext> contexts) const {
  std::uint64_t total = 0;
  for (auto context : contexts) total += at(category, position, context);
  return total;
}

std::uint64_t AggregateCounts::total() const {
  std::uint64_t total = 0;
  for (auto cell : cells) total += cell;
  return total;
}

AggregateCounts merge(const AggregateCounts& x, const AggregateCounts& y) {
  AggregateCounts out;
  for (std::size_t i = 0; i < out.cells.size(); ++i) out.cells[i] = x.cells[i] + y.cells[i];
  out.files_processed = x.files_processed + y.files_processed;
  out.files_skipped = x.files_skipped + y.files_skipped;
  out.sentences_processed = x.sentences_processed + y.sentences_processed;
  out.sentences_failed = x.sentences_failed + y.sentences_failed;
  return out;
}

void add_sentence(AggregateCounts& agg, const Tree& tree, const ClassifierConfig& config) {
  // Classify first so a failure leaves agg untouched.
  std::vector<ClassifiedNP> classified;
  try {
    classified = classify_all(tree, extract_np_occurrences(tree), config);
  } catch (const Error&) {
    ++agg.sentences_failed;
    return;
  }
  for (const auto& np : classified) {
    ++agg.at(np.category, np.occurrence.position, np.occurrence.context);
  }
  ++agg.sentences_processed;
}

AggregateCounts aggregate(std::span<const Tree> trees, const ClassifierConfig& config) {
  AggregateCounts agg;
  for (const Tree& tree : trees) add_sentence(agg, tree, config);
  return agg;
}

// ---------------------------------------------------------------------------
// Ingestion

std::string Diagnostic::str() const {
  std::string out = file_id;
  if (offset) out += ":" + std::to_string(*offset);
  return out + ": " + message;
}

std::vector<std::filesystem::path> list_corpus_files(const CorpusSource& source) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::exists(source.root_path, ec)) {
    throw Error(ErrorCode::RootNotFound, "corpus root not found: " + source.root_path.string());
  }
  if (fs::is_regular_file(source.root_path, ec)) return {source.root_path};

  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(source.root_path, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    const std::string relative = file_id_for(source, it->path());
    if (::fnmatch(source.include_glob.c_str(), relative.c_str(), 0) == 0) {
      files.push_back(it->path());
    }
  }
  if (ec) {
    throw Error(ErrorCode::RootNotFound,
                "cannot read corpus root " + source.root_path.string() + ": " + ec.message());
  }
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    return file_id_for(source, a) < file_id_for(source, b);
  });
  return files;
}

std::string file_id_for(const CorpusSource& source, const std::filesystem::path& file) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source.root_path, ec)) {
    return file.filename().generic_string();
  }
  return file.lexically_relative(source.root_path).generic_string();
}

ParsedFile load_file(const CorpusSource& source, const std::filesystem::path& file) {
  ParsedFile out;
  out.file_id = file_id_for(source, file);
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    out.error = Diagnostic{out.file_id, std::nullopt, "cannot open file"};
    return out;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    out.trees = parse_trees(buffer.str(), ParseOptions{source.dialect});
  } catch (const ParseError& e) {
    out.trees.clear();
    out.error = Diagnostic{out.file_id, e.offset(), std::string(error_code_name(e.code())) + ": " + e.what()};
  }
  return out;
}

IngestStats ingest(const CorpusSource& source, const SentenceVisitor& visit,
                   const DiagnosticSink& diagnostics) {
  IngestStats stats;
  for (const auto& file : list_corpus_files(source)) {
    ParsedFile parsed = load_file(source, file);
    if (parsed.error) {
      ++stats.files_skipped;
      if (diagnostics) diagnostics(*parsed.error);
      continue;
    }
    ++stats.files_processed;
    for (std::size_t i = 0; i < parsed.trees.size(); ++i) {
      visit(parsed.file_id, i, parsed.trees[i]);
      ++stats.sentences;
    }
  }
  return stats;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();  // joins
  if (failure) std::rethrow_exception(failure);
}

AggregateCounts aggregate_corpus(const CorpusSource& source, const ClassifierConfig& config,
                                 unsigned jobs, const DiagnosticSink& diagnostics) {
  auto per_file = map_files(
      source,
      [&](const std::string&, std::span<const Tree> trees) { return aggregate(trees, config); },
      jobs);
  if (diagnostics) {
    for (const auto& d : per_file.diagnostics) diagnostics(d);
  }
  AggregateCounts total;
  for (const auto& file : per_file.results) total = merge(total, file);
  total.files_processed = per_file.stats.files_processed;
  total.files_skipped = per_file.stats.files_skipped;
  return total;
}

}  // namespace subjscan
