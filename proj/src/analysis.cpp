#include "jperf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

namespace jperf {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DegenerateInput,
                fmt::format("vectors differ in length ({} vs {})", x.size(), y.size()));
  }
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorKind::DegenerateInput, "correlation needs at least two values");

  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorKind::DegenerateInput, "correlation undefined for a constant vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 hold ranks i+1..j
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::DegenerateInput,
                fmt::format("vectors differ in length ({} vs {})", x.size(), y.size()));
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

CorrelationMatrix correlation_table(const std::vector<IndicatorVector>& vectors) {
  if (vectors.size() < 2) {
    throw Error(ErrorKind::DegenerateInput, "correlation table needs at least two indicators");
  }
  const std::size_t m = vectors.size();
  CorrelationMatrix out;
  out.pearson.assign(m, std::vector<double>(m, 1.0));
  out.spearman.assign(m, std::vector<double>(m, 1.0));
  for (const auto& v : vectors) {
    if (v.size() != vectors.front().size()) {
      throw Error(ErrorKind::DegenerateInput, "indicator vectors differ in length");
    }
    out.labels.push_back(v.label());
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      out.pearson[a][b] = out.pearson[b][a] = pearson(vectors[a].values, vectors[b].values);
      out.spearman[a][b] = out.spearman[b][a] = spearman(vectors[a].values, vectors[b].values);
    }
  }
  return out;
}

std::vector<RankedJournal> top_k(const JournalSet& journals, const IndicatorVector& indicator,
                                 std::size_t k) {
  if (indicator.size() != journals.size()) {
    throw Error(ErrorKind::DimensionMismatch, "indicator and journal set differ in length");
  }
  if (k > journals.size()) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("k = {} exceeds the {} journals", k, journals.size()));
  }
  std::vector<std::size_t> order(journals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (indicator[a] != indicator[b]) return indicator[a] > indicator[b];
    return journals[a].id < journals[b].id;
  });
  std::vector<RankedJournal> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back({journals[order[i]].id, indicator[order[i]]});
  return out;
}

std::size_t top_k_overlap(const std::vector<RankedJournal>& a,
                          const std::vector<RankedJournal>& b) {
  std::unordered_set<std::string> ids;
  for (const auto& r : a) ids.insert(r.id);
  return static_cast<std::size_t>(
      std::count_if(b.begin(), b.end(), [&](const auto& r) { return ids.contains(r.id); }));
}

}  // namespace jperf
