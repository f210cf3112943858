#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jperf/core.hpp"
#include "jperf/indicators.hpp"

namespace jperf {

/// Product-moment correlation (two-pass, mean-subtracted). Throws
/// DegenerateInput for length < 2, unequal lengths or zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// 1-based ranks; tied values share the average of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> pearson;
  std::vector<std::vector<double>> spearman;
};

CorrelationMatrix correlation_table(const std::vector<IndicatorVector>& vectors);

struct RankedJournal {
  std::string id;
  double value = 0.0;
};

/// The k highest values, descending; ties go to the smaller journal id.
std::vector<RankedJournal> top_k(const JournalSet& journals, const IndicatorVector& indicator,
                                 std::size_t k);

/// Number of journal ids present in both rankings.
std::size_t top_k_overlap(const std::vector<RankedJournal>& a, const std::vector<RankedJournal>& b);

}  // namespace jperf
