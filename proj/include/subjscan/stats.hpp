#pragma once

// 2x2 contingency tables and the Pearson chi-square test.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "subjscan/aggregate.hpp"

namespace subjscan {

// Rows: pronoun, indefinite. Columns: subject, non-subject.
struct ContingencyTable2x2 {
  std::uint64_t a = 0;  // pronoun x subject
  std::uint64_t b = 0;  // pronoun x non-subject
  std::uint64_t c = 0;  // indefinite x subject
  std::uint64_t d = 0;  // indefinite x non-subject

  std::uint64_t total() const { return a + b + c + d; }

  friend bool operator==(const ContingencyTable2x2&, const ContingencyTable2x2&) = default;
};

enum class SignificanceBand { P_lt_0_001, P_lt_0_01, P_lt_0_05, NotSignificant };

// "p<0.001", "p<0.01", "p<0.05", "not significant"
std::string_view to_string(SignificanceBand band);
std::optional<SignificanceBand> band_from_string(std::string_view name);

// Critical values of the chi-square distribution with one degree of freedom.
inline constexpr double kCritical001 = 10.828;
inline constexpr double kCritical01 = 6.635;
inline constexpr double kCritical05 = 3.841;

SignificanceBand band_for_df1(double statistic);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 1;
  SignificanceBand significance_band = SignificanceBand::NotSignificant;
  // Upper-tail probability, erfc(sqrt(x/2)) for one degree of freedom.
  double p_value = 1.0;
};

// Pearson statistic without continuity correction. The cross-product
// difference is formed in 128-bit integers. Throws Error(DegenerateMargin)
// when a row or column sums to zero.
ChiSquareResult chi_square_2x2(const ContingencyTable2x2& table);

using ContextSet = std::set<ClauseContext>;

// Pronoun and indefinite counts by position, summed over the given contexts.
ContingencyTable2x2 build_pronoun_indefinite_table(const AggregateCounts& agg,
                                                   const ContextSet& contexts);

// Percentage with two decimals, rounded half up in exact integer arithmetic.
struct Percentage {
  std::int64_t hundredths = 0;  // 8.14% is 814

  double value() const { return static_cast<double>(hundredths) / 100.0; }
  std::string str() const;  // "8.14"

  friend bool operator==(const Percentage&, const Percentage&) = default;
};

// 100 * numerator / denominator. Throws Error(ZeroDenominator).
Percentage ratio_report(std::uint64_t numerator, std::uint64_t denominator);

}  // namespace subjscan
