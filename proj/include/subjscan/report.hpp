#pragma once

// Report types produced by the CLI commands and their three renderings:
// aligned text, tab-separated lines and line-delimited JSON records. Every
// record carries a "record" field naming its type; the *_from_record
// functions invert to_record exactly.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "subjscan/aggregate.hpp"
#include "subjscan/givenness.hpp"
#include "subjscan/query.hpp"
#include "subjscan/stats.hpp"

namespace subjscan {

enum class ReportFormat { AlignedText, TabSeparated, StructuredRecords };

std::optional<ReportFormat> format_from_string(std::string_view name);  // text|tsv|records

using Json = nlohmann::json;

// Reads one JSON value per non-blank line.
std::vector<Json> read_records(std::istream& in);

// ---------------------------------------------------------------------------
// Table 1

enum Table1Column : std::size_t {
  kSubjTC, kSubjRC, kSubjTCRC, kSubjMatrix,
  kNonSubjTC, kNonSubjRC, kNonSubjTCRC, kNonSubjMatrix,
  kTable1Columns
};

using Table1Row = std::array<std::uint64_t, kTable1Columns>;

struct Table1Block {
  std::string name;
  std::array<Table1Row, kAllCategories.size()> rows{};  // indexed by GivennessCategory
  Table1Row total{};

  friend bool operator==(const Table1Block&, const Table1Block&) = default;
};

struct Table1Report {
  std::vector<Table1Block> blocks;

  friend bool operator==(const Table1Report&, const Table1Report&) = default;
};

// TC+RC and total columns are derived here, never read from input.
Table1Block make_table1_block(std::string name, const AggregateCounts& agg);

// Builds counts from 36 numbers: for each category in order, subject TC, RC,
// matrix, then non-subject TC, RC, matrix. Throws std::invalid_argument on
// the wrong count.
AggregateCounts counts_from_table1_cells(std::span<const std::uint64_t> cells);

// TC+RC = TC + RC in every row and the total row equals the column sums.
bool table1_identities_hold(const Table1Block& block);

void render(const Table1Report& report, ReportFormat format, std::ostream& out);
Json to_record(const Table1Block& block, GivennessCategory category);
Table1Report table1_from_records(std::span<const Json> records);

// ---------------------------------------------------------------------------
// Chi-square

struct ChisqReport {
  std::string label;
  ContingencyTable2x2 table;
  ChiSquareResult result;
};

// "3952.2, df=1, p<0.001"
std::string summary_line(const ChiSquareResult& result);

void render(const ChisqReport& report, ReportFormat format, std::ostream& out);
Json to_record(const ChisqReport& report);
ChisqReport chisq_from_record(const Json& record);

// ---------------------------------------------------------------------------
// Match listings

struct LateClosureRow {
  std::string file_id;
  std::size_t sentence_index = 0;
  LeafRange span;
  std::string verb;
  std::string verb_pos;
  std::string critical_np;
  GivennessCategory category = GivennessCategory::NotClassified;

  friend bool operator==(const LateClosureRow&, const LateClosureRow&) = default;
};

struct NPRow {
  std::string file_id;
  std::size_t sentence_index = 0;
  LeafRange span;
  GrammaticalPosition position = GrammaticalPosition::Subject;
  ClauseContext context = ClauseContext::Matrix;
  GivennessCategory category = GivennessCategory::NotClassified;
  std::string text;

  friend bool operator==(const NPRow&, const NPRow&) = default;
};

struct AdverbialMatchRow {
  std::string file_id;
  std::size_t sentence_index = 0;
  LeafRange span;
  std::string category;
  bool comma_delimited = false;
  bool sentence_initial = false;
  std::string text;

  friend bool operator==(const AdverbialMatchRow&, const AdverbialMatchRow&) = default;
};

void render(std::span<const LateClosureRow> rows, ReportFormat format, std::ostream& out);
void render(std::span<const NPRow> rows, ReportFormat format, std::ostream& out);
void render(std::span<const AdverbialMatchRow> rows, ReportFormat format, std::ostream& out);

Json to_record(const LateClosureRow& row);
Json to_record(const NPRow& row);
Json to_record(const AdverbialMatchRow& row);
LateClosureRow late_closure_from_record(const Json& record);
NPRow np_from_record(const Json& record);
AdverbialMatchRow adverbial_match_from_record(const Json& record);

// ---------------------------------------------------------------------------
// Adverbial survey

struct AdverbialSurveyRow {
  std::string category;  // ALL, SBAR, PP, other
  std::uint64_t total = 0;
  std::uint64_t not_comma = 0;
  std::optional<Percentage> not_comma_percent;  // absent when total is 0

  friend bool operator==(const AdverbialSurveyRow&, const AdverbialSurveyRow&) = default;
};

struct AdverbialSurvey {
  std::vector<AdverbialSurveyRow> rows;

  friend bool operator==(const AdverbialSurvey&, const AdverbialSurvey&) = default;
};

// Tallies records into ALL, SBAR, PP and other rows; empty rows are left out.
AdverbialSurvey summarize_adverbials(std::span<const AdverbialMatchRow> records);
AdverbialSurveyRow survey_row(std::string category, std::uint64_t not_comma, std::uint64_t total);

void render(const AdverbialSurvey& survey, ReportFormat format, std::ostream& out);
Json to_record(const AdverbialSurveyRow& row);
AdverbialSurveyRow survey_row_from_record(const Json& record);

// ---------------------------------------------------------------------------
// Verb frames, parse check, -SBJ cross-check

void render(const VerbFrameProfile& profile, ReportFormat format, std::ostream& out);
Json to_record(const VerbFrameProfile& profile);
VerbFrameProfile verb_frames_from_record(const Json& record);

struct ParseCheckRow {
  std::string file_id;
  std::size_t sentences = 0;
  std::optional<std::string> error;

  friend bool operator==(const ParseCheckRow&, const ParseCheckRow&) = default;
};

void render(std::span<const ParseCheckRow> rows, ReportFormat format, std::ostream& out);
Json to_record(const ParseCheckRow& row);
ParseCheckRow parse_check_from_record(const Json& record);

void render(const SubjectTagAgreement& agreement, ReportFormat format, std::ostream& out);
Json to_record(const SubjectTagAgreement& agreement);
SubjectTagAgreement crosscheck_from_record(const Json& record);

// Counters from an aggregation run, appended to corpus-backed reports.
struct CorpusSummary {
  std::uint64_t files_processed = 0;
  std::uint64_t files_skipped = 0;
  std::uint64_t sentences = 0;

  friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

void render(const CorpusSummary& summary, ReportFormat format, std::ostream& out);
Json to_record(const CorpusSummary& summary);
CorpusSummary corpus_summary_from_record(const Json& record);

}  // namespace subjscan
