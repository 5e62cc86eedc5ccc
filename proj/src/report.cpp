#include "subjscan/report.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace subjscan {

namespace {

constexpr std::array<std::string_view, kTable1Columns> kTable1Keys = {
    "subj_tc", "subj_rc", "subj_tc_rc", "subj_matrix",
    "nonsubj_tc", "nonsubj_rc", "nonsubj_tc_rc", "nonsubj_matrix"};

// Columns padded to their widest cell; the first column is left-aligned.
class TextTable {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::vector<std::size_t> widths() const {
    std::vector<std::size_t> w;
    for (const auto& row : rows_) {
      if (w.size() < row.size()) w.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    }
    return w;
  }

  void print(std::ostream& out) const {
    const auto w = widths();
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::string pad(w[i] - row[i].size(), ' ');
        if (i > 0) line += "  ";
        line += i == 0 ? row[i] + pad : pad + row[i];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string span_str(LeafRange span) {
  return std::to_string(span.begin) + ":" + std::to_string(span.end);
}

Json span_json(LeafRange span) { return Json::array({span.begin, span.end}); }

LeafRange span_from_json(const Json& j) {
  return LeafRange{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
}

void expect_record(const Json& record, std::string_view type) {
  if (!record.is_object() || record.value("record", "") != type) {
    throw std::invalid_argument("expected a '" + std::string(type) + "' record");
  }
}

template <typename T, typename Parse>
T enum_field(const Json& record, const char* key, Parse parse) {
  const auto name = record.at(key).get<std::string>();
  auto value = parse(name);
  if (!value) throw std::invalid_argument(std::string("bad value for ") + key + ": " + name);
  return *value;
}

std::string tsv_join(std::initializer_list<std::string> fields) {
  std::string line;
  for (const auto& f : fields) {
    if (!line.empty()) line += '\t';
    line += f;
  }
  return line;
}

}  // namespace

std::optional<ReportFormat> format_from_string(std::string_view name) {
  if (name == "text") return ReportFormat::AlignedText;
  if (name == "tsv") return ReportFormat::TabSeparated;
  if (name == "records") return ReportFormat::StructuredRecords;
  return std::nullopt;
}

std::vector<Json> read_records(std::istream& in) {
  std::vector<Json> out;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(Json::parse(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table 1

Table1Block make_table1_block(std::string name, const AggregateCounts& agg) {
  using GP = GrammaticalPosition;
  using CC = ClauseContext;
  Table1Block block;
  block.name = std::move(name);
  for (auto category : kAllCategories) {
    Table1Row& row = block.rows[static_cast<std::size_t>(category)];
    row[kSubjTC] = agg.at(category, GP::Subject, CC::EmbeddedTC);
    row[kSubjRC] = agg.at(category, GP::Subject, CC::EmbeddedRC);
    row[kSubjTCRC] = row[kSubjTC] + row[kSubjRC];
    row[kSubjMatrix] = agg.at(category, GP::Subject, CC::Matrix);
    row[kNonSubjTC] = agg.at(category, GP::NonSubject, CC::EmbeddedTC);
    row[kNonSubjRC] = agg.at(category, GP::NonSubject, CC::EmbeddedRC);
    row[kNonSubjTCRC] = row[kNonSubjTC] + row[kNonSubjRC];
    row[kNonSubjMatrix] = agg.at(category, GP::NonSubject, CC::Matrix);
    for (std::size_t c = 0; c < kTable1Columns; ++c) block.total[c] += row[c];
  }
  return block;
}

AggregateCounts counts_from_table1_cells(std::span<const std::uint64_t> cells) {
  using GP = GrammaticalPosition;
  using CC = ClauseContext;
  constexpr std::size_t kPerRow = 6;
  if (cells.size() != kAllCategories.size() * kPerRow) {
    throw std::invalid_argument("expected " + std::to_string(kAllCategories.size() * kPerRow) +
                                " counts, got " + std::to_string(cells.size()));
  }
  AggregateCounts agg;
  for (std::size_t r = 0; r < kAllCategories.size(); ++r) {
    const auto category = kAllCategories[r];
    const auto row = cells.subspan(r * kPerRow, kPerRow);
    agg.at(category, GP::Subject, CC::EmbeddedTC) = row[0];
    agg.at(category, GP::Subject, CC::EmbeddedRC) = row[1];
    agg.at(category, GP::Subject, CC::Matrix) = row[2];
    agg.at(category, GP::NonSubject, CC::EmbeddedTC) = row[3];
    agg.at(category, GP::NonSubject, CC::EmbeddedRC) = row[4];
    agg.at(category, GP::NonSubject, CC::Matrix) = row[5];
  }
  return agg;
}

bool table1_identities_hold(const Table1Block& block) {
  Table1Row sums{};
  for (const auto& row : block.rows) {
    if (row[kSubjTCRC] != row[kSubjTC] + row[kSubjRC]) return false;
    if (row[kNonSubjTCRC] != row[kNonSubjTC] + row[kNonSubjRC]) return false;
    for (std::size_t c = 0; c < kTable1Columns; ++c) sums[c] += row[c];
  }
  return sums == block.total;
}

Json to_record(const Table1Block& block, GivennessCategory category) {
  Json j = {{"record", "table1_row"}, {"block", block.name},
            {"category", std::string(to_string(category))}};
  const auto& row = block.rows[static_cast<std::size_t>(category)];
  for (std::size_t c = 0; c < kTable1Columns; ++c) j[std::string(kTable1Keys[c])] = row[c];
  return j;
}

namespace {

Json total_record(const Table1Block& block) {
  Json j = {{"record", "table1_row"}, {"block", block.name}, {"category", "total"}};
  for (std::size_t c = 0; c < kTable1Columns; ++c) j[std::string(kTable1Keys[c])] = block.total[c];
  return j;
}

}  // namespace

Table1Report table1_from_records(std::span<const Json> records) {
  Table1Report report;
  for (const auto& r : records) {
    if (r.value("record", "") != "table1_row") continue;
    const auto name = r.at("block").get<std::string>();
    auto it = std::find_if(report.blocks.begin(), report.blocks.end(),
                           [&](const Table1Block& b) { return b.name == name; });
    if (it == report.blocks.end()) {
      report.blocks.push_back(Table1Block{name, {}, {}});
      it = std::prev(report.blocks.end());
    }
    Table1Row row{};
    for (std::size_t c = 0; c < kTable1Columns; ++c) {
      row[c] = r.at(std::string(kTable1Keys[c])).get<std::uint64_t>();
    }
    const auto category = r.at("category").get<std::string>();
    if (category == "total") {
      it->total = row;
    } else {
      it->rows[static_cast<std::size_t>(enum_field<GivennessCategory>(r, "category", category_from_string))] = row;
    }
  }
  return report;
}

void render(const Table1Report& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    for (const auto& block : report.blocks) {
      for (auto category : kAllCategories) out << to_record(block, category).dump() << '\n';
      out << total_record(block).dump() << '\n';
    }
    return;
  }
  if (format == ReportFormat::TabSeparated) {
    out << "block\tcategory";
    for (auto key : kTable1Keys) out << '\t' << key;
    out << '\n';
    for (const auto& block : report.blocks) {
      auto line = [&](std::string_view label, const Table1Row& row) {
        out << block.name << '\t' << label;
        for (auto v : row) out << '\t' << v;
        out << '\n';
      };
      for (auto category : kAllCategories) {
        line(to_string(category), block.rows[static_cast<std::size_t>(category)]);
      }
      line("total", block.total);
    }
    return;
  }

  bool first = true;
  for (const auto& block : report.blocks) {
    if (!first) out << '\n';
    first = false;
    TextTable table;
    auto add = [&](std::string label, const Table1Row& row) {
      std::vector<std::string> cells{std::move(label)};
      for (std::size_t c = 0; c < kTable1Columns; ++c) {
        if (c == kNonSubjTC) cells.push_back("|");
        cells.push_back(std::to_string(row[c]));
      }
      table.add(std::move(cells));
    };
    table.add({"givenness status", "TC", "RC", "TC+RC", "matrix", "|", "TC", "RC", "TC+RC", "matrix"});
    for (auto category : kAllCategories) {
      add(std::string(to_string(category)), block.rows[static_cast<std::size_t>(category)]);
    }
    add("total:", block.total);

    const auto w = table.widths();
    std::size_t subj_width = 0;
    for (std::size_t i = 1; i <= 4; ++i) subj_width += w[i] + 2;
    std::string heading(w[0], ' ');
    std::string subj = "Subjects";
    heading += "  " + subj + std::string(subj_width > subj.size() ? subj_width - subj.size() : 1, ' ');
    heading += "   Non Subjects";
    out << block.name << ":\n" << heading << '\n';
    table.print(out);
  }
}

// ---------------------------------------------------------------------------
// Chi-square

std::string summary_line(const ChiSquareResult& result) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.1f", result.statistic);
  return std::string(buffer) + ", df=" + std::to_string(result.degrees_of_freedom) + ", " +
         std::string(to_string(result.significance_band));
}

Json to_record(const ChisqReport& report) {
  return {{"record", "chisq"},
          {"label", report.label},
          {"a", report.table.a},
          {"b", report.table.b},
          {"c", report.table.c},
          {"d", report.table.d},
          {"statistic", report.result.statistic},
          {"df", report.result.degrees_of_freedom},
          {"band", std::string(to_string(report.result.significance_band))},
          {"p_value", report.result.p_value}};
}

ChisqReport chisq_from_record(const Json& r) {
  expect_record(r, "chisq");
  ChisqReport report;
  report.label = r.at("label").get<std::string>();
  report.table = {r.at("a").get<std::uint64_t>(), r.at("b").get<std::uint64_t>(),
                  r.at("c").get<std::uint64_t>(), r.at("d").get<std::uint64_t>()};
  report.result.statistic = r.at("statistic").get<double>();
  report.result.degrees_of_freedom = r.at("df").get<int>();
  report.result.significance_band = enum_field<SignificanceBand>(r, "band", band_from_string);
  report.result.p_value = r.at("p_value").get<double>();
  return report;
}

void render(const ChisqReport& report, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::StructuredRecords:
      out << to_record(report).dump() << '\n';
      return;
    case ReportFormat::TabSeparated: {
      char stat[64];
      std::snprintf(stat, sizeof stat, "%.4f", report.result.statistic);
      out << "label\ta\tb\tc\td\tstatistic\tdf\tband\n";
      out << tsv_join({report.label, std::to_string(report.table.a), std::to_string(report.table.b),
                       std::to_string(report.table.c), std::to_string(report.table.d), stat,
                       std::to_string(report.result.degrees_of_freedom),
                       std::string(to_string(report.result.significance_band))})
          << '\n';
      return;
    }
    case ReportFormat::AlignedText: {
      if (!report.label.empty()) out << report.label << ":\n";
      TextTable table;
      table.add({"", "subj", "non-subj"});
      table.add({"pronoun", std::to_string(report.table.a), std::to_string(report.table.b)});
      table.add({"indefinite", std::to_string(report.table.c), std::to_string(report.table.d)});
      table.print(out);
      out << "chi2 = " << summary_line(report.result) << '\n';
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Match listings

Json to_record(const LateClosureRow& row) {
  return {{"record", "late_closure"},
          {"file", row.file_id},
          {"sentence", row.sentence_index},
          {"span", span_json(row.span)},
          {"verb", row.verb},
          {"verb_pos", row.verb_pos},
          {"critical_np", row.critical_np},
          {"category", std::string(to_string(row.category))}};
}

LateClosureRow late_closure_from_record(const Json& r) {
  expect_record(r, "late_closure");
  return {r.at("file").get<std::string>(),
          r.at("sentence").get<std::size_t>(),
          span_from_json(r.at("span")),
          r.at("verb").get<std::string>(),
          r.at("verb_pos").get<std::string>(),
          r.at("critical_np").get<std::string>(),
          enum_field<GivennessCategory>(r, "category", category_from_string)};
}

Json to_record(const NPRow& row) {
  return {{"record", "np"},
          {"file", row.file_id},
          {"sentence", row.sentence_index},
          {"span", span_json(row.span)},
          {"position", std::string(to_string(row.position))},
          {"context", std::string(to_string(row.context))},
          {"category", std::string(to_string(row.category))},
          {"text", row.text}};
}

NPRow np_from_record(const Json& r) {
  expect_record(r, "np");
  return {r.at("file").get<std::string>(),
          r.at("sentence").get<std::size_t>(),
          span_from_json(r.at("span")),
          enum_field<GrammaticalPosition>(r, "position", position_from_string),
          enum_field<ClauseContext>(r, "context", context_from_string),
          enum_field<GivennessCategory>(r, "category", category_from_string),
          r.at("text").get<std::string>()};
}

Json to_record(const AdverbialMatchRow& row) {
  return {{"record", "adverbial"},
          {"file", row.file_id},
          {"sentence", row.sentence_index},
          {"span", span_json(row.span)},
          {"category", row.category},
          {"comma_delimited", row.comma_delimited},
          {"sentence_initial", row.sentence_initial},
          {"text", row.text}};
}

AdverbialMatchRow adverbial_match_from_record(const Json& r) {
  expect_record(r, "adverbial");
  return {r.at("file").get<std::string>(),
          r.at("sentence").get<std::size_t>(),
          span_from_json(r.at("span")),
          r.at("category").get<std::string>(),
          r.at("comma_delimited").get<bool>(),
          r.at("sentence_initial").get<bool>(),
          r.at("text").get<std::string>()};
}

void render(std::span<const LateClosureRow> rows, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    for (const auto& row : rows) out << to_record(row).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    for (const auto& row : rows) {
      out << tsv_join({row.file_id, std::to_string(row.sentence_index), "late_closure",
                       span_str(row.span), row.verb, row.verb_pos, row.critical_np,
                       std::string(to_string(row.category))})
          << '\n';
    }
  } else {
    TextTable table;
    table.add({"location", "span", "verb", "critical NP", "category"});
    for (const auto& row : rows) {
      table.add({row.file_id + "#" + std::to_string(row.sentence_index), span_str(row.span),
                 row.verb + "/" + row.verb_pos, row.critical_np, std::string(to_string(row.category))});
    }
    table.print(out);
    out << rows.size() << " match" << (rows.size() == 1 ? "" : "es") << '\n';
  }
}

void render(std::span<const NPRow> rows, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    for (const auto& row : rows) out << to_record(row).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    for (const auto& row : rows) {
      out << tsv_join({row.file_id, std::to_string(row.sentence_index), "np", span_str(row.span),
                       std::string(to_string(row.position)), std::string(to_string(row.context)),
                       std::string(to_string(row.category)), row.text})
          << '\n';
    }
  } else {
    TextTable table;
    table.add({"location", "span", "position", "context", "category", "text"});
    for (const auto& row : rows) {
      table.add({row.file_id + "#" + std::to_string(row.sentence_index), span_str(row.span),
                 std::string(to_string(row.position)), std::string(to_string(row.context)),
                 std::string(to_string(row.category)), row.text});
    }
    table.print(out);
  }
}

void render(std::span<const AdverbialMatchRow> rows, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    for (const auto& row : rows) out << to_record(row).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    for (const auto& row : rows) {
      out << tsv_join({row.file_id, std::to_string(row.sentence_index), "adverbial",
                       span_str(row.span), row.category, row.comma_delimited ? "comma" : "no-comma",
                       row.sentence_initial ? "initial" : "stacked", row.text})
          << '\n';
    }
  } else {
    TextTable table;
    table.add({"location", "span", "category", "comma", "text"});
    for (const auto& row : rows) {
      table.add({row.file_id + "#" + std::to_string(row.sentence_index), span_str(row.span),
                 row.category, row.comma_delimited ? "yes" : "no", row.text});
    }
    table.print(out);
  }
}

// ---------------------------------------------------------------------------
// Adverbial survey

AdverbialSurveyRow survey_row(std::string category, std::uint64_t not_comma, std::uint64_t total) {
  AdverbialSurveyRow row{std::move(category), total, not_comma, std::nullopt};
  if (total > 0) row.not_comma_percent = ratio_report(not_comma, total);
  return row;
}

AdverbialSurvey summarize_adverbials(std::span<const AdverbialMatchRow> records) {
  std::array<std::uint64_t, 4> total{}, not_comma{};  // ALL, SBAR, PP, other
  for (const auto& r : records) {
    const std::size_t bucket = r.category == "SBAR" ? 1 : r.category == "PP" ? 2 : 3;
    for (std::size_t b : {std::size_t{0}, bucket}) {
      ++total[b];
      if (!r.comma_delimited) ++not_comma[b];
    }
  }
  AdverbialSurvey survey;
  const std::array<std::string, 4> names = {"ALL", "SBAR", "PP", "other"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (total[i] == 0) continue;
    survey.rows.push_back(survey_row(names[i], not_comma[i], total[i]));
  }
  return survey;
}

Json to_record(const AdverbialSurveyRow& row) {
  Json j = {{"record", "adverbial_survey"},
            {"category", row.category},
            {"total", row.total},
            {"not_comma", row.not_comma},
            {"not_comma_percent", nullptr}};
  if (row.not_comma_percent) j["not_comma_percent"] = row.not_comma_percent->str();
  return j;
}

AdverbialSurveyRow survey_row_from_record(const Json& r) {
  expect_record(r, "adverbial_survey");
  AdverbialSurveyRow row{r.at("category").get<std::string>(), r.at("total").get<std::uint64_t>(),
                         r.at("not_comma").get<std::uint64_t>(), std::nullopt};
  if (!r.at("not_comma_percent").is_null()) {
    const auto text = r.at("not_comma_percent").get<std::string>();
    const auto dot = text.find('.');
    if (dot == std::string::npos || text.size() != dot + 3) {
      throw std::invalid_argument("bad percentage: " + text);
    }
    row.not_comma_percent = Percentage{std::stoll(text.substr(0, dot)) * 100 + std::stoll(text.substr(dot + 1))};
  }
  return row;
}

void render(const AdverbialSurvey& survey, ReportFormat format, std::ostream& out) {
  auto pct = [](const AdverbialSurveyRow& row) {
    return row.not_comma_percent ? row.not_comma_percent->str() + "%" : std::string("n/a");
  };
  if (format == ReportFormat::StructuredRecords) {
    for (const auto& row : survey.rows) out << to_record(row).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    out << "category\ttotal\tnot_comma\tnot_comma_percent\n";
    for (const auto& row : survey.rows) {
      out << tsv_join({row.category, std::to_string(row.total), std::to_string(row.not_comma),
                       row.not_comma_percent ? row.not_comma_percent->str() : ""})
          << '\n';
    }
  } else {
    TextTable table;
    table.add({"category", "fronted", "no comma", "percent"});
    for (const auto& row : survey.rows) {
      table.add({row.category, std::to_string(row.total), std::to_string(row.not_comma), pct(row)});
    }
    table.print(out);
  }
}

// ---------------------------------------------------------------------------
// Verb frames

Json to_record(const VerbFrameProfile& profile) {
  Json j = {{"record", "verb_frames"}, {"lemma", profile.lemma}, {"total", profile.total()}};
  for (auto frame : kAllFrames) j[std::string(to_string(frame))] = profile.count(frame);
  return j;
}

VerbFrameProfile verb_frames_from_record(const Json& r) {
  expect_record(r, "verb_frames");
  VerbFrameProfile profile;
  profile.lemma = r.at("lemma").get<std::string>();
  for (auto frame : kAllFrames) {
    profile.add(frame, r.at(std::string(to_string(frame))).get<std::uint64_t>());
  }
  if (profile.total() != r.at("total").get<std::uint64_t>()) {
    throw std::invalid_argument("verb_frames total does not match its frames");
  }
  return profile;
}

void render(const VerbFrameProfile& profile, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    out << to_record(profile).dump() << '\n';
    return;
  }
  if (format == ReportFormat::TabSeparated) {
    out << "lemma\tnp\ttc\trc\tintransitive\ttotal\n";
    out << profile.lemma;
    for (auto frame : kAllFrames) out << '\t' << profile.count(frame);
    out << '\t' << profile.total() << '\n';
    return;
  }
  out << "verb: " << profile.lemma << '\n';
  TextTable table;
  table.add({"frame", "count"});
  table.add({"NP", std::to_string(profile.count(VerbFrame::NPComplement))});
  table.add({"TC", std::to_string(profile.count(VerbFrame::ThatClause))});
  table.add({"RC", std::to_string(profile.count(VerbFrame::ReducedClause))});
  table.add({"intransitive", std::to_string(profile.count(VerbFrame::Intransitive))});
  table.add({"total", std::to_string(profile.total())});
  table.print(out);
}

// ---------------------------------------------------------------------------
// Parse check

Json to_record(const ParseCheckRow& row) {
  Json j = {{"record", "parse_check"}, {"file", row.file_id}, {"sentences", row.sentences},
            {"error", nullptr}};
  if (row.error) j["error"] = *row.error;
  return j;
}

ParseCheckRow parse_check_from_record(const Json& r) {
  expect_record(r, "parse_check");
  ParseCheckRow row{r.at("file").get<std::string>(), r.at("sentences").get<std::size_t>(), std::nullopt};
  if (!r.at("error").is_null()) row.error = r.at("error").get<std::string>();
  return row;
}

void render(std::span<const ParseCheckRow> rows, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    for (const auto& row : rows) out << to_record(row).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    out << "file\tsentences\terror\n";
    for (const auto& row : rows) {
      out << tsv_join({row.file_id, std::to_string(row.sentences), row.error.value_or("")}) << '\n';
    }
  } else {
    TextTable table;
    table.add({"file", "sentences", "status"});
    for (const auto& row : rows) {
      table.add({row.file_id, std::to_string(row.sentences), row.error ? *row.error : "ok"});
    }
    table.print(out);
  }
}

// ---------------------------------------------------------------------------
// -SBJ cross-check

Json to_record(const SubjectTagAgreement& a) {
  return {{"record", "sbj_crosscheck"},
          {"both", a.both},
          {"positional_only", a.positional_only},
          {"tag_only", a.tag_only},
          {"disagreement_rate", a.disagreement_rate()}};
}

SubjectTagAgreement crosscheck_from_record(const Json& r) {
  expect_record(r, "sbj_crosscheck");
  return {r.at("both").get<std::uint64_t>(), r.at("positional_only").get<std::uint64_t>(),
          r.at("tag_only").get<std::uint64_t>()};
}

void render(const SubjectTagAgreement& a, ReportFormat format, std::ostream& out) {
  char rate[32];
  std::snprintf(rate, sizeof rate, "%.4f", a.disagreement_rate());
  if (format == ReportFormat::StructuredRecords) {
    out << to_record(a).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    out << "both\tpositional_only\ttag_only\tdisagreement_rate\n";
    out << tsv_join({std::to_string(a.both), std::to_string(a.positional_only),
                     std::to_string(a.tag_only), rate})
        << '\n';
  } else {
    TextTable table;
    table.add({"positional subject and -SBJ", std::to_string(a.both)});
    table.add({"positional subject only", std::to_string(a.positional_only)});
    table.add({"-SBJ tag only", std::to_string(a.tag_only)});
    table.add({"disagreement rate", rate});
    table.print(out);
  }
}

// ---------------------------------------------------------------------------
// Corpus summary

Json to_record(const CorpusSummary& s) {
  return {{"record", "corpus_summary"},
          {"files_processed", s.files_processed},
          {"files_skipped", s.files_skipped},
          {"sentences", s.sentences}};
}

CorpusSummary corpus_summary_from_record(const Json& r) {
  expect_record(r, "corpus_summary");
  return {r.at("files_processed").get<std::uint64_t>(), r.at("files_skipped").get<std::uint64_t>(),
          r.at("sentences").get<std::uint64_t>()};
}

void render(const CorpusSummary& s, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::StructuredRecords) {
    out << to_record(s).dump() << '\n';
  } else if (format == ReportFormat::TabSeparated) {
    out << "# files_processed=" << s.files_processed << " files_skipped=" << s.files_skipped
        << " sentences=" << s.sentences << '\n';
  } else {
    out << s.files_processed << " files, " << s.sentences << " sentences";
    if (s.files_skipped > 0) out << ", " << s.files_skipped << " skipped";
    out << '\n';
  }
}

}  // namespace subjscan
