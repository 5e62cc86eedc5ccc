#include "doctest.h"

#include <sstream>

#include "subjscan/cli.hpp"
#include "subjscan/config.hpp"
#include "subjscan/error.hpp"
#include "subjscan/report.hpp"
#include "support/support.hpp"
#include "tables.hpp"

using namespace subjscan;
using testsupport::fixture;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<Json> records_of(const std::string& text) {
  std::istringstream in(text);
  return read_records(in);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration

TEST_CASE("config file parsing") {
  const ToolConfig c = parse_tool_config(
      "# comment\n\n"
      "definite_determiners = the this\n"
      "verb.Go = go goes WENT\n");
  CHECK(c.classifier.definite_determiners == TagSet{"the", "this"});
  CHECK(c.inflections_for("go") == InflectionSet{"go", "goes", "went"});
  CHECK(c.inflections_for("realize").count("realised"));
  CHECK(parse_tool_config(render_tool_config(c)) == c);
  CHECK(parse_tool_config(render_tool_config(ToolConfig::defaults())) == ToolConfig::defaults());

  for (const char* bad : {"colour = red\n", "definite_determiners the\n",
                          "definite_determiners = a\nindefinite_determiners = a\n"}) {
    try {
      parse_tool_config(bad);
      FAIL("expected ConfigError for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConfigError);
    }
  }

  const ToolConfig empty = parse_tool_config("verb.seem =\n");
  for (const char* lemma : {"seem", "unknown"}) {
    try {
      empty.inflections_for(lemma);
      FAIL("expected EmptyInflectionSet");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyInflectionSet);
    }
  }
}

// ---------------------------------------------------------------------------
// Records

TEST_CASE("every record type round-trips") {
  const AggregateCounts brown = counts_from_table1_cells(tables::kBrownCells);
  Table1Report t1;
  t1.blocks.push_back(make_table1_block("Brown", brown));
  t1.blocks.push_back(make_table1_block("WSJ", counts_from_table1_cells(tables::kWsjCells)));
  std::ostringstream t1_out;
  render(t1, ReportFormat::StructuredRecords, t1_out);
  const auto t1_records = records_of(t1_out.str());
  CHECK(t1_records.size() == 2 * (kAllCategories.size() + 1));
  CHECK(table1_from_records(t1_records) == t1);

  const ChisqReport chisq{"matrix", {7580, 956, 4157, 5269}, chi_square_2x2({7580, 956, 4157, 5269})};
  const ChisqReport back = chisq_from_record(Json::parse(to_record(chisq).dump()));
  CHECK(back.label == chisq.label);
  CHECK(back.table == chisq.table);
  CHECK(back.result.statistic == chisq.result.statistic);
  CHECK(back.result.p_value == chisq.result.p_value);
  CHECK(back.result.significance_band == chisq.result.significance_band);

  const LateClosureRow lc{"wsj_0001.mrg", 4, {2, 5}, "worked", "VBD", "it", GivennessCategory::Pronoun};
  CHECK(late_closure_from_record(Json::parse(to_record(lc).dump())) == lc);

  const NPRow np{"a.mrg", 0, {0, 2}, GrammaticalPosition::NonSubject, ClauseContext::EmbeddedRC,
                 GivennessCategory::Definite, "the \"safe\"\ttab"};
  CHECK(np_from_record(Json::parse(to_record(np).dump())) == np);

  const AdverbialMatchRow adv{"b.mrg", 7, {0, 3}, "PP", true, false, "In the morning"};
  CHECK(adverbial_match_from_record(Json::parse(to_record(adv).dump())) == adv);

  for (const auto& row : {survey_row("ALL", 591, 7256), survey_row("other", 0, 0)}) {
    CHECK(survey_row_from_record(Json::parse(to_record(row).dump())) == row);
  }
  CHECK_FALSE(survey_row("other", 0, 0).not_comma_percent);

  VerbFrameProfile vf;
  vf.lemma = "realize";
  vf.counts = {37, 78, 64, 5};
  CHECK(verb_frames_from_record(Json::parse(to_record(vf).dump())) == vf);

  for (const ParseCheckRow& pc : {ParseCheckRow{"a.mrg", 3, std::nullopt},
                                  ParseCheckRow{"b.mrg", 0, std::string("b.mrg:4: unbalanced")}}) {
    CHECK(parse_check_from_record(Json::parse(to_record(pc).dump())) == pc);
  }

  const SubjectTagAgreement sa{5, 1, 2};
  CHECK(crosscheck_from_record(Json::parse(to_record(sa).dump())) == sa);

  const CorpusSummary cs{3, 1, 10};
  CHECK(corpus_summary_from_record(Json::parse(to_record(cs).dump())) == cs);

  // Readers reject a record of the wrong type.
  CHECK_THROWS(np_from_record(to_record(lc)));
}

TEST_CASE("Table 1 derived columns") {
  for (const auto* printed : {&tables::kBrownPrinted, &tables::kWsjPrinted}) {
    const auto& cells = printed == &tables::kBrownPrinted ? tables::kBrownCells : tables::kWsjCells;
    const Table1Block block = make_table1_block("x", counts_from_table1_cells(cells));
    CHECK(table1_identities_hold(block));
    for (std::size_t r = 0; r < kAllCategories.size(); ++r) {
      for (std::size_t c = 0; c < kTable1Columns; ++c) CHECK(block.rows[r][c] == (*printed)[r][c]);
    }
    Table1Block broken = block;
    broken.rows[1][kSubjTCRC] += 1;
    CHECK_FALSE(table1_identities_hold(broken));
  }
  CHECK(make_table1_block("b", counts_from_table1_cells(tables::kBrownCells)).total[kSubjMatrix] == 24562);
  CHECK(make_table1_block("w", counts_from_table1_cells(tables::kWsjCells)).total[kSubjMatrix] == 17345);
  CHECK_THROWS_AS(counts_from_table1_cells(std::vector<std::uint64_t>(35, 0)), std::invalid_argument);
}

TEST_CASE("adverbial summary buckets") {
  std::vector<AdverbialMatchRow> rows;
  const auto add = [&](std::string cat, bool comma) { rows.push_back({"f", 0, {0, 1}, cat, comma, true, ""}); };
  add("SBAR", true);
  add("PP", false);
  add("PP", true);
  add("ADVP", false);
  const AdverbialSurvey s = summarize_adverbials(rows);
  REQUIRE(s.rows.size() == 4);
  CHECK(s.rows[0] == survey_row("ALL", 2, 4));
  CHECK(s.rows[1] == survey_row("SBAR", 0, 1));
  CHECK(s.rows[2] == survey_row("PP", 1, 2));
  CHECK(s.rows[3] == survey_row("other", 1, 1));
  CHECK(summarize_adverbials({}).rows.empty());
}

// ---------------------------------------------------------------------------
// Command line

TEST_CASE("chisq from cells") {
  Run r = run({"chisq", "--cells", "7580", "956", "4157", "5269"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "3952.2, df=1, p<0.001"));

  r = run({"chisq", "--cells", "1", "1", "1", "1"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "0.0, df=1, not significant"));

  r = run({"chisq", "--cells", "0", "0", "3", "4"});
  CHECK(r.code == kExitDegenerate);
  CHECK(contains(r.err, "row or column"));

  r = run({"chisq", "--cells", "1", "2", "3"});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("chisq from Table 1 counts and contexts") {
  std::vector<std::string> args{"chisq", "--format", "records", "--contexts", "rc", "--from-counts"};
  for (auto v : tables::kBrownCells) args.push_back(std::to_string(v));
  const Run r = run(args);
  REQUIRE(r.code == kExitOk);
  const auto recs = records_of(r.out);
  REQUIRE(recs.size() == 1);
  const ChisqReport rep = chisq_from_record(recs[0]);
  CHECK(rep.table == ContingencyTable2x2{1027, 134, 119, 344});
  CHECK(std::fabs(rep.result.statistic - 627.6) <= 0.05);

  std::vector<std::string> bad = args;
  bad[4] = "subordinate";
  CHECK(run(bad).code == kExitUsage);
}

TEST_CASE("chisq over a corpus") {
  const Run r = run({"chisq", "--corpus", fixture("table6.mrg").string(), "--format", "tsv"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "3\t0\t2\t1"));
}

TEST_CASE("adverbial percentages") {
  Run r = run({"adverbials", "--from-counts", "591", "7256"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "8.14"));

  r = run({"adverbials", "--from-counts", "0", "0"});
  CHECK(r.code == kExitDegenerate);

  r = run({"adverbials", "--corpus", fixture("adverbials/ten.mrg").string()});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "30.00"));

  r = run({"adverbials", "--corpus", fixture("adverbials/survey20.mrg").string(), "--format", "records"});
  REQUIRE(r.code == kExitOk);
  std::vector<AdverbialSurveyRow> survey;
  for (const auto& rec : records_of(r.out)) {
    if (rec.at("record") == "adverbial_survey") survey.push_back(survey_row_from_record(rec));
  }
  REQUIRE(survey.size() == 4);
  CHECK(survey[0] == survey_row("ALL", 7, 18));
  CHECK(survey[0].not_comma_percent->str() == "38.89");
  CHECK(survey[1] == survey_row("SBAR", 1, 5));
  CHECK(survey[2] == survey_row("PP", 4, 7));
  CHECK(survey[3] == survey_row("other", 2, 6));

  r = run({"adverbials", "--corpus", fixture("adverbials/none.mrg").string(), "--format", "records"});
  REQUIRE(r.code == kExitOk);
  for (const auto& rec : records_of(r.out)) CHECK(rec.at("record") != "adverbial_survey");
}

TEST_CASE("adverbial match listing") {
  const Run r = run({"adverbials", "--matches", "--format", "records", "--corpus",
                     fixture("adverbials/survey20.mrg").string()});
  REQUIRE(r.code == kExitOk);
  std::size_t matches = 0, initial = 0;
  for (const auto& rec : records_of(r.out)) {
    if (rec.at("record") != "adverbial") continue;
    ++matches;
    if (adverbial_match_from_record(rec).sentence_initial) ++initial;
  }
  CHECK(matches == 18);
  CHECK(initial == 16);
}

TEST_CASE("verb frames") {
  Run r = run({"verb", "--verb", "realize", "--format", "records", "--corpus",
               fixture("verbs/frames12.mrg").string()});
  REQUIRE(r.code == kExitOk);
  const auto recs = records_of(r.out);
  REQUIRE_FALSE(recs.empty());
  const VerbFrameProfile p = verb_frames_from_record(recs[0]);
  CHECK(p.count(VerbFrame::NPComplement) == 3);
  CHECK(p.count(VerbFrame::ThatClause) == 4);
  CHECK(p.count(VerbFrame::ReducedClause) == 2);
  CHECK(p.count(VerbFrame::Intransitive) == 3);

  r = run({"verb", "--verb", "ate", "--forms", "ate", "--corpus", fixture("late_closure/planted.mrg").string(),
           "--format", "records"});
  REQUIRE(r.code == kExitOk);
  CHECK(verb_frames_from_record(records_of(r.out)[0]).total() == 1);

  r = run({"verb", "--verb", "seem", "--corpus", fixture("verbs/frames12.mrg").string()});
  CHECK(r.code == kExitConfig);

  r = run({"verb", "--corpus", fixture("verbs/frames12.mrg").string()});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("late-closure listing") {
  const Run r = run({"late-closure", "--format", "tsv", "--corpus", fixture("late_closure/planted.mrg").string()});
  REQUIRE(r.code == kExitOk);
  for (const auto& row : testsupport::read_tsv("late_closure/planted.tsv")) {
    CHECK_MESSAGE(contains(r.out, "planted.mrg\t" + row[0] + "\tlate_closure\t" + row[1]), row[2]);
  }
}

TEST_CASE("table1 over a corpus and from counts") {
  Run r = run({"table1", "--format", "records", "--corpus", fixture("holmes.mrg").string()});
  REQUIRE(r.code == kExitOk);
  std::vector<Json> t1;
  for (const auto& rec : records_of(r.out)) {
    if (rec.at("record") == "table1_row") t1.push_back(rec);
  }
  const Table1Report rep = table1_from_records(t1);
  REQUIRE(rep.blocks.size() == 1);
  CHECK(rep.blocks[0].name == "holmes.mrg");
  CHECK(rep.blocks[0].total[kSubjMatrix] == 3);
  CHECK(rep.blocks[0].total[kSubjTCRC] == 2);
  CHECK(rep.blocks[0].total[kNonSubjTCRC] == 2);
  CHECK(rep.blocks[0].total[kNonSubjMatrix] == 1);

  std::vector<std::string> args{"table1", "--name", "Brown", "--from-counts"};
  for (auto v : tables::kBrownCells) args.push_back(std::to_string(v));
  r = run(args);
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "Brown"));
  CHECK(contains(r.out, "24562"));
  CHECK(contains(r.out, "11679"));

  args.pop_back();
  CHECK(run(args).code == kExitUsage);
}

TEST_CASE("exit codes for missing and unparsable input") {
  Run r = run({"table1", "--corpus", fixture("does/not/exist").string()});
  CHECK(r.code == kExitMissingInput);
  CHECK_FALSE(r.err.empty());

  testsupport::TempDir dir;
  dir.write("bad.mrg", "(S (NP (PRP it))");
  r = run({"classify", "--corpus", dir.path().string()});
  CHECK(r.code == kExitMissingInput);
  CHECK(contains(r.err, "bad.mrg"));
  r = run({"parse", "--corpus", dir.path().string()});
  CHECK(r.code == kExitMissingInput);

  r = run({"parse", "--corpus", fixture("ingest/malformed").string()});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "b.mrg"));

  r = run({"table1", "--corpus", fixture("ingest/malformed").string()});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.err, "b.mrg"));
}

TEST_CASE("usage and configuration errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"chisq", "--format", "xml", "--cells", "1", "1", "1", "1"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  testsupport::TempDir dir;
  dir.write("bad.conf", "colour = red\n");
  Run r = run({"classify", "--classifier-config", (dir.path() / "bad.conf").string(), "--corpus",
               fixture("holmes.mrg").string()});
  CHECK(r.code == kExitConfig);
  CHECK(contains(r.err, "colour"));
  CHECK(run({"dump-config", "--classifier-config", (dir.path() / "missing.conf").string()}).code == kExitConfig);

  dir.write("good.conf", "indefinite_determiners = a an some no\n");
  r = run({"dump-config", "--classifier-config", (dir.path() / "good.conf").string()});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "indefinite_determiners = a an no some"));

  r = run({"--dump-default-config"});
  CHECK(r.code == kExitOk);
  CHECK(parse_tool_config(r.out) == ToolConfig::defaults());
}

TEST_CASE("every corpus command in every format") {
  const std::vector<std::vector<std::string>> commands = {
      {"parse"}, {"table1"}, {"chisq"}, {"late-closure"}, {"adverbials", "--matches"},
      {"verb", "--verb", "realize"}, {"classify"}, {"crosscheck"}};
  for (const auto& cmd : commands) {
    for (const char* format : {"text", "tsv", "records"}) {
      std::vector<std::string> args = cmd;
      args.insert(args.end(), {"--format", format, "--corpus", fixture("synthetic").string(), "--jobs", "2"});
      const Run r = run(args);
      CHECK_MESSAGE(r.code == kExitOk, cmd[0] << " " << format << ": " << r.err);
      CHECK_MESSAGE(!r.out.empty(), cmd[0] << " " << format);
      if (std::string(format) == "records") {
        // Every line parses as one JSON object naming its record type.
        for (const auto& rec : records_of(r.out)) CHECK(rec.contains("record"));
      }
    }
  }
}

TEST_CASE("output does not depend on the job count") {
  for (const char* cmd : {"classify", "late-closure", "table1"}) {
    const std::string base =
        run({cmd, "--format", "tsv", "--jobs", "1", "--corpus", fixture("synthetic").string()}).out;
    for (const char* jobs : {"2", "4", "8"}) {
      CHECK(run({cmd, "--format", "tsv", "--jobs", jobs, "--corpus", fixture("synthetic").string()}).out == base);
    }
  }
}

TEST_CASE("crosscheck on the Holmes fixture") {
  const Run r = run({"crosscheck", "--format", "records", "--corpus", fixture("holmes.mrg").string()});
  REQUIRE(r.code == kExitOk);
  const auto recs = records_of(r.out);
  REQUIRE_FALSE(recs.empty());
  CHECK(crosscheck_from_record(recs[0]).both == 5);
  const CorpusSummary s = corpus_summary_from_record(recs.back());
  CHECK(s == CorpusSummary{1, 0, 3});
}

TEST_CASE("corpus root from the environment") {
  ::setenv(kCorpusEnv, fixture("holmes.mrg").c_str(), 1);
  const Run r = run({"crosscheck", "--format", "tsv"});
  ::unsetenv(kCorpusEnv);
  CHECK(r.code == kExitOk);
}
