#include "subjscan/stats.hpp"

#include <cmath>

#include "subjscan/error.hpp"

namespace subjscan {

namespace {
__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;
}  // namespace

std::string_view to_string(SignificanceBand band) {
  switch (band) {
    case SignificanceBand::P_lt_0_001: return "p<0.001";
    case SignificanceBand::P_lt_0_01: return "p<0.01";
    case SignificanceBand::P_lt_0_05: return "p<0.05";
    case SignificanceBand::NotSignificant: return "not significant";
  }
  return "not significant";
}

std::optional<SignificanceBand> band_from_string(std::string_view name) {
  for (auto band : {SignificanceBand::P_lt_0_001, SignificanceBand::P_lt_0_01,
                    SignificanceBand::P_lt_0_05, SignificanceBand::NotSignificant}) {
    if (to_string(band) == name) return band;
  }
  return std::nullopt;
}

SignificanceBand band_for_df1(double statistic) {
  if (statistic > kCritical001) return SignificanceBand::P_lt_0_001;
  if (statistic > kCritical01) return SignificanceBand::P_lt_0_01;
  if (statistic > kCritical05) return SignificanceBand::P_lt_0_05;
  return SignificanceBand::NotSignificant;
}

ChiSquareResult chi_square_2x2(const ContingencyTable2x2& t) {
  const std::uint64_t row1 = t.a + t.b;
  const std::uint64_t row2 = t.c + t.d;
  const std::uint64_t col1 = t.a + t.c;
  const std::uint64_t col2 = t.b + t.d;
  if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) {
    throw Error(ErrorCode::DegenerateMargin,
                "table has a zero margin (rows " + std::to_string(row1) + ", " +
                    std::to_string(row2) + "; columns " + std::to_string(col1) + ", " +
                    std::to_string(col2) + ")");
  }

  const int128 ad = static_cast<int128>(t.a) * t.d;
  const int128 bc = static_cast<int128>(t.b) * t.c;
  const int128 diff = ad > bc ? ad - bc : bc - ad;

  // diff^2 can exceed 128 bits at corpus scale, so square in long double.
  const long double diff_ld = static_cast<long double>(diff);
  const long double numerator = static_cast<long double>(t.total()) * diff_ld * diff_ld;
  const long double denominator = static_cast<long double>(row1) * static_cast<long double>(row2) *
                                  static_cast<long double>(col1) * static_cast<long double>(col2);

  ChiSquareResult result;
  result.statistic = static_cast<double>(numerator / denominator);
  result.degrees_of_freedom = 1;
  result.significance_band = band_for_df1(result.statistic);
  result.p_value = std::erfc(std::sqrt(result.statistic / 2.0));
  return result;
}

ContingencyTable2x2 build_pronoun_indefinite_table(const AggregateCounts& agg,
                                                   const ContextSet& contexts) {
  ContingencyTable2x2 t;
  for (auto context : contexts) {
    t.a += agg.at(GivennessCategory::Pronoun, GrammaticalPosition::Subject, context);
    t.b += agg.at(GivennessCategory::Pronoun, GrammaticalPosition::NonSubject, context);
    t.c += agg.at(GivennessCategory::Indefinite, GrammaticalPosition::Subject, context);
    t.d += agg.at(GivennessCategory::Indefinite, GrammaticalPosition::NonSubject, context);
  }
  return t;
}

std::string Percentage::str() const {
  const std::int64_t whole = hundredths / 100;
  const std::int64_t frac = hundredths % 100;
  return std::to_string(whole) + "." + (frac < 10 ? "0" : "") + std::to_string(frac);
}

Percentage ratio_report(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::ZeroDenominator, "percentage of zero items");
  // round(10000 n / d) half up == floor((20000 n + d) / 2d)
  const uint128 n = numerator;
  const uint128 d = denominator;
  const uint128 hundredths = (20000 * n + d) / (2 * d);
  return Percentage{static_cast<std::int64_t>(hundredths)};
}

}  // namespace subjscan
