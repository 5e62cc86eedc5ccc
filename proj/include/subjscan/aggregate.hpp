#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "subjscan/givenness.hpp"
#include "subjscan/query.hpp"
#include "subjscan/treebank.hpp"

namespace subjscan {

// NP counts indexed by givenness category x grammatical position x clause
// context, plus ingestion counters.
struct AggregateCounts {
  static constexpr std::size_t kCategories = kAllCategories.size();
  static constexpr std::size_t kPositions = kAllPositions.size();
  static constexpr std::size_t kContexts = kAllContexts.size();
  static constexpr std::size_t kCells = kCategories * kPositions * kContexts;

  std::array<std::uint64_t, kCells> cells{};
  std::uint64_t files_processed = 0;
  std::uint64_t files_skipped = 0;
  std::uint64_t sentences_processed = 0;
  std::uint64_t sentences_failed = 0;

  static std::size_t index(GivennessCategory category, GrammaticalPosition position,
                           ClauseContext context);

  std::uint64_t& at(GivennessCategory category, GrammaticalPosition position, ClauseContext context) {
    return cells[index(category, position, context)];
  }
  std::uint64_t at(GivennessCategory category, GrammaticalPosition position,
                   ClauseContext context) const {
    return cells[index(category, position, context)];
  }

  std::uint64_t sum(GivennessCategory category, GrammaticalPosition position,
                    std::span<const ClauseContext> contexts) const;
  std::uint64_t total() const;

  friend bool operator==(const AggregateCounts&, const AggregateCounts&) = default;
};

// Cell-wise and counter-wise sum.
AggregateCounts merge(const AggregateCounts& x, const AggregateCounts& y);

// Classifies every NP occurrence of one sentence into agg.
void add_sentence(AggregateCounts& agg, const Tree& tree, const ClassifierConfig& config);

AggregateCounts aggregate(std::span<const Tree> trees, const ClassifierConfig& config);

}  // namespace subjscan
