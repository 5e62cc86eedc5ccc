#include "subjscan/cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "subjscan/config.hpp"
#include "subjscan/corpus.hpp"
#include "subjscan/error.hpp"
#include "subjscan/report.hpp"

namespace subjscan {

namespace {

struct AllFilesFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> corpora;
  std::string glob = "*";
  std::string format = "text";
  std::string dialect = "auto";
  std::string classifier_config;
  std::vector<std::string> contexts;
  std::vector<std::uint64_t> from_counts;
  std::vector<std::uint64_t> cells;
  std::vector<std::string> names;
  std::string verb;
  std::vector<std::string> forms;
  unsigned jobs = 0;
  bool matches = false;
};

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err), format_(*format_from_string(opts.format)) {
    config_ = opts.classifier_config.empty() ? ToolConfig::defaults()
                                             : load_tool_config(opts.classifier_config);
  }

  int parse_check();
  int table1();
  int chisq();
  int late_closure();
  int adverbials();
  int verb();
  int classify();
  int crosscheck();
  int dump_config();

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  ReportFormat format_;
  ToolConfig config_;

  std::vector<std::string> corpus_roots() const {
    if (!opts_.corpora.empty()) return opts_.corpora;
    if (const char* env = std::getenv(kCorpusEnv); env != nullptr && *env != '\0') return {env};
    throw Error(ErrorCode::RootNotFound,
                std::string("no corpus given; pass --corpus or set ") + kCorpusEnv);
  }

  CorpusSource source(const std::string& root) const {
    static const std::map<std::string, Dialect> dialects = {
        {"auto", Dialect::Auto}, {"wrapped", Dialect::Wrapped}, {"unwrapped", Dialect::Unwrapped}};
    return CorpusSource{root, opts_.glob, dialects.at(opts_.dialect)};
  }

  // Runs fn over every corpus root, reporting diagnostics and failing when no
  // file of a corpus could be parsed.
  template <typename Fn>
  auto map_corpora(Fn fn) {
    using R = std::invoke_result_t<Fn&, const std::string&, std::span<const Tree>>;
    PerFileResults<R> all;
    for (const auto& root : corpus_roots()) {
      auto part = map_files(source(root), fn, opts_.jobs);
      for (const auto& d : part.diagnostics) err_ << d.str() << '\n';
      if (part.stats.all_failed()) {
        throw AllFilesFailed("no file under " + root + " could be parsed");
      }
      all.stats.files_processed += part.stats.files_processed;
      all.stats.files_skipped += part.stats.files_skipped;
      all.stats.sentences += part.stats.sentences;
      for (std::size_t i = 0; i < part.results.size(); ++i) {
        all.file_ids.push_back(std::move(part.file_ids[i]));
        all.results.push_back(std::move(part.results[i]));
      }
    }
    return all;
  }

  void summary(const IngestStats& stats) {
    render(CorpusSummary{stats.files_processed, stats.files_skipped, stats.sentences}, format_, out_);
  }

  AggregateCounts aggregate_root(const std::string& root) {
    AggregateCounts agg = aggregate_corpus(source(root), config_.classifier, opts_.jobs,
                                           [&](const Diagnostic& d) { err_ << d.str() << '\n'; });
    if (agg.files_processed == 0 && agg.files_skipped > 0) {
      throw AllFilesFailed("no file under " + root + " could be parsed");
    }
    return agg;
  }

  ContextSet selected_contexts() const {
    using CC = ClauseContext;
    if (opts_.contexts.empty()) return {kAllContexts.begin(), kAllContexts.end()};
    ContextSet out;
    for (const auto& name : opts_.contexts) {
      if (name == "all") {
        out.insert(kAllContexts.begin(), kAllContexts.end());
      } else if (name == "embedded") {
        out.insert({CC::EmbeddedTC, CC::EmbeddedRC});
      } else if (auto c = context_from_string(name)) {
        out.insert(*c);
      } else {
        throw std::invalid_argument("unknown context '" + name + "'");
      }
    }
    return out;
  }
};

std::string contexts_label(const ContextSet& contexts) {
  if (contexts.size() == kAllContexts.size()) return "all";
  std::string label;
  for (auto c : contexts) {
    if (!label.empty()) label += "+";
    label += to_string(c);
  }
  return label;
}

int Runner::parse_check() {
  std::vector<ParseCheckRow> rows;
  std::size_t failed = 0;
  for (const auto& root : corpus_roots()) {
    const auto src = source(root);
    const auto files = list_corpus_files(src);
    std::vector<ParseCheckRow> part(files.size());
    parallel_for(files.size(), opts_.jobs, [&](std::size_t i) {
      ParsedFile parsed = load_file(src, files[i]);
      part[i] = {parsed.file_id, parsed.trees.size(), std::nullopt};
      if (parsed.error) part[i].error = parsed.error->str();
    });
    for (auto& row : part) {
      if (row.error) ++failed;
      rows.push_back(std::move(row));
    }
  }
  render(std::span<const ParseCheckRow>(rows), format_, out_);
  if (!rows.empty() && failed == rows.size()) {
    err_ << "error: no file could be parsed\n";
    return kExitMissingInput;
  }
  return kExitOk;
}

int Runner::table1() {
  Table1Report report;
  if (!opts_.from_counts.empty()) {
    constexpr std::size_t kBlockCells = 36;
    if (opts_.from_counts.size() % kBlockCells != 0) {
      throw std::invalid_argument("--from-counts takes 36 numbers per corpus block, got " +
                                  std::to_string(opts_.from_counts.size()));
    }
    const std::span<const std::uint64_t> all(opts_.from_counts);
    for (std::size_t b = 0; b * kBlockCells < all.size(); ++b) {
      std::string name = b < opts_.names.size() ? opts_.names[b] : "block " + std::to_string(b + 1);
      report.blocks.push_back(make_table1_block(
          std::move(name), counts_from_table1_cells(all.subspan(b * kBlockCells, kBlockCells))));
    }
    render(report, format_, out_);
    return kExitOk;
  }

  IngestStats stats;
  const auto roots = corpus_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const AggregateCounts agg = aggregate_root(roots[i]);
    std::string name = i < opts_.names.size()
                           ? opts_.names[i]
                           : std::filesystem::path(roots[i]).lexically_normal().filename().string();
    if (name.empty()) name = roots[i];
    report.blocks.push_back(make_table1_block(std::move(name), agg));
    stats.files_processed += agg.files_processed;
    stats.files_skipped += agg.files_skipped;
    stats.sentences += agg.sentences_processed;
  }
  render(report, format_, out_);
  summary(stats);
  return kExitOk;
}

int Runner::chisq() {
  ContingencyTable2x2 table;
  std::string label;
  if (!opts_.cells.empty()) {
    if (opts_.cells.size() != 4) throw std::invalid_argument("--cells takes exactly 4 numbers");
    table = {opts_.cells[0], opts_.cells[1], opts_.cells[2], opts_.cells[3]};
  } else {
    const ContextSet contexts = selected_contexts();
    label = contexts_label(contexts);
    AggregateCounts agg;
    if (!opts_.from_counts.empty()) {
      agg = counts_from_table1_cells(opts_.from_counts);
    } else {
      for (const auto& root : corpus_roots()) agg = merge(agg, aggregate_root(root));
    }
    table = build_pronoun_indefinite_table(agg, contexts);
  }
  ChisqReport report{label, table, {}};
  try {
    report.result = chi_square_2x2(table);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateMargin) throw;
    err_ << "error: " << e.what()
         << "; the statistic is undefined when a row or column of the table is all zero\n";
    return kExitDegenerate;
  }
  render(report, format_, out_);
  return kExitOk;
}

int Runner::late_closure() {
  const auto& classifier = config_.classifier;
  auto per_file = map_corpora([&](const std::string& file_id, std::span<const Tree> trees) {
    std::vector<LateClosureRow> rows;
    for (std::size_t s = 0; s < trees.size(); ++s) {
      const Tree& tree = trees[s];
      for (const auto& m : find_late_closure_configs(tree, {file_id, s})) {
        rows.push_back({file_id, s, m.span.leaf_range, m.verb_token, m.verb_pos,
                        tree.text(m.critical_np), classify_np(tree, m.critical_np, classifier)});
      }
    }
    return rows;
  });
  std::vector<LateClosureRow> rows;
  for (auto& part : per_file.results) rows.insert(rows.end(), part.begin(), part.end());
  render(std::span<const LateClosureRow>(rows), format_, out_);
  summary(per_file.stats);
  return kExitOk;
}

int Runner::adverbials() {
  if (!opts_.from_counts.empty()) {
    if (opts_.from_counts.size() != 2) {
      throw std::invalid_argument("--from-counts takes NOT_COMMA TOTAL");
    }
    const auto not_comma = opts_.from_counts[0];
    const auto total = opts_.from_counts[1];
    if (not_comma > total) throw std::invalid_argument("NOT_COMMA exceeds TOTAL");
    AdverbialSurvey survey;
    survey.rows.push_back({"ALL", total, not_comma, ratio_report(not_comma, total)});
    render(survey, format_, out_);
    return kExitOk;
  }

  auto per_file = map_corpora([](const std::string& file_id, std::span<const Tree> trees) {
    std::vector<AdverbialMatchRow> rows;
    for (std::size_t s = 0; s < trees.size(); ++s) {
      for (const auto& a : survey_fronted_adverbials(trees[s], {file_id, s})) {
        rows.push_back({file_id, s, a.span.leaf_range, a.category, a.comma_delimited,
                        a.sentence_initial, trees[s].text(a.node)});
      }
    }
    return rows;
  });
  std::vector<AdverbialMatchRow> rows;
  for (auto& part : per_file.results) rows.insert(rows.end(), part.begin(), part.end());
  if (opts_.matches) render(std::span<const AdverbialMatchRow>(rows), format_, out_);
  render(summarize_adverbials(rows), format_, out_);
  summary(per_file.stats);
  return kExitOk;
}

int Runner::verb() {
  if (opts_.verb.empty()) throw std::invalid_argument("--verb LEMMA is required");
  const std::string lemma = lowercase(opts_.verb);
  InflectionSet forms;
  if (!opts_.forms.empty()) {
    for (const auto& f : opts_.forms) forms.insert(lowercase(f));
  } else {
    forms = config_.inflections_for(lemma);
  }
  auto per_file = map_corpora([&](const std::string&, std::span<const Tree> trees) {
    return profile_verb_frames(trees, lemma, forms);
  });
  VerbFrameProfile profile;
  profile.lemma = lemma;
  for (const auto& part : per_file.results) profile.merge(part);
  render(profile, format_, out_);
  summary(per_file.stats);
  return kExitOk;
}

int Runner::classify() {
  const auto& classifier = config_.classifier;
  auto per_file = map_corpora([&](const std::string& file_id, std::span<const Tree> trees) {
    std::vector<NPRow> rows;
    for (std::size_t s = 0; s < trees.size(); ++s) {
      const Tree& tree = trees[s];
      for (const auto& np : classify_all(tree, extract_np_occurrences(tree, {file_id, s}), classifier)) {
        rows.push_back({file_id, s, np.occurrence.span.leaf_range, np.occurrence.position,
                        np.occurrence.context, np.category, tree.text(np.occurrence.node)});
      }
    }
    return rows;
  });
  std::vector<NPRow> rows;
  for (auto& part : per_file.results) rows.insert(rows.end(), part.begin(), part.end());
  render(std::span<const NPRow>(rows), format_, out_);
  summary(per_file.stats);
  return kExitOk;
}

int Runner::crosscheck() {
  auto per_file = map_corpora([](const std::string&, std::span<const Tree> trees) {
    SubjectTagAgreement a;
    for (const auto& tree : trees) a.merge(cross_check_subject_tags(tree));
    return a;
  });
  SubjectTagAgreement total;
  for (const auto& part : per_file.results) total.merge(part);
  render(total, format_, out_);
  summary(per_file.stats);
  return kExitOk;
}

int Runner::dump_config() {
  out_ << render_tool_config(config_);
  return kExitOk;
}

void add_corpus_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--corpus", o.corpora, "Corpus root directory or file (repeatable)")
      ->envname(kCorpusEnv);
  cmd.add_option("--glob", o.glob, "Pattern over relative file paths")->capture_default_str();
  cmd.add_option("--dialect", o.dialect, "Outer wrapper handling")
      ->check(CLI::IsMember({"auto", "wrapped", "unwrapped"}))
      ->capture_default_str();
  cmd.add_option("--jobs", o.jobs, "Worker threads, 0 = hardware concurrency");
}

void add_common_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv", "records"}))
      ->capture_default_str();
  cmd.add_option("--classifier-config", o.classifier_config, "Classifier and verb lexicon file");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::RootNotFound:
      return kExitMissingInput;
    case ErrorCode::DegenerateMargin:
    case ErrorCode::ZeroDenominator:
      return kExitDegenerate;
    case ErrorCode::ConfigError:
    case ErrorCode::EmptyInflectionSet:
      return kExitConfig;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  bool dump_default = false;

  CLI::App app{"Subject givenness and late-closure queries over bracketed treebanks", "subjscan"};
  app.add_flag("--dump-default-config", dump_default, "Print the built-in configuration and exit");
  app.require_subcommand(0, 1);

  std::map<CLI::App*, int (Runner::*)()> commands;
  auto command = [&](const char* name, const char* help, int (Runner::*fn)()) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common_options(*cmd, o);
    commands[cmd] = fn;
    return cmd;
  };

  add_corpus_options(*command("parse", "Check that every corpus file parses", &Runner::parse_check), o);

  auto* t1 = command("table1", "NP counts by givenness, position and clause", &Runner::table1);
  add_corpus_options(*t1, o);
  t1->add_option("--from-counts", o.from_counts,
                 "36 numbers per block: per category subj TC RC matrix, non-subj TC RC matrix");
  t1->add_option("--name", o.names, "Block names, one per corpus or counts block");

  auto* cs = command("chisq", "Pronoun vs indefinite by subject position", &Runner::chisq);
  add_corpus_options(*cs, o);
  auto* cells = cs->add_option("--cells", o.cells, "a b c d: pronoun subj/non-subj, indefinite subj/non-subj")
                    ->expected(4);
  cs->add_option("--from-counts", o.from_counts, "36 Table 1 counts, as for table1")
      ->excludes(cells);
  cs->add_option("--contexts", o.contexts, "matrix, tc, rc, other, embedded or all");

  add_corpus_options(*command("late-closure", "Verb-final VPs followed by an NP", &Runner::late_closure), o);

  auto* adv = command("adverbials", "Fronted adverbials and comma delimitation", &Runner::adverbials);
  add_corpus_options(*adv, o);
  adv->add_option("--from-counts", o.from_counts, "NOT_COMMA TOTAL")->expected(2);
  adv->add_flag("--matches", o.matches, "Also list every fronted adverbial");

  auto* vb = command("verb", "Complement frames of one verb", &Runner::verb);
  add_corpus_options(*vb, o);
  vb->add_option("--verb", o.verb, "Verb lemma")->required();
  vb->add_option("--forms", o.forms, "Inflected forms, overriding the configured ones");

  add_corpus_options(*command("classify", "List NPs with position, clause and givenness", &Runner::classify), o);
  add_corpus_options(*command("crosscheck", "Positional subjects against -SBJ tags", &Runner::crosscheck), o);
  command("dump-config", "Print the effective configuration", &Runner::dump_config);

  std::vector<const char*> argv{"subjscan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dump_default) {
      out << render_tool_config(ToolConfig::defaults());
      return kExitOk;
    }
    for (const auto& [cmd, fn] : commands) {
      if (cmd->parsed()) {
        Runner runner(o, out, err);
        return (runner.*fn)();
      }
    }
    out << app.help();
    return kExitUsage;
  } catch (const AllFilesFailed& e) {
    err << "error: " << e.what() << '\n';
    return kExitMissingInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace subjscan
