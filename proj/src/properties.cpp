#include "jperf/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace jperf {

FieldPartition::FieldPartition(std::vector<int> field_of) : field_of_(std::move(field_of)) {
  for (std::size_t i = 0; i < field_of_.size(); ++i) {
    const int k = field_of_[i];
    if (k != 1 && k != 2) {
      throw Error(ErrorKind::InvalidParameter,
                  fmt::format("journal {} assigned to field {}; expected 1 or 2", i, k), i);
    }
    members_[static_cast<std::size_t>(k - 1)].push_back(i);
  }
  if (members_[0].empty() || members_[1].empty()) {
    throw Error(ErrorKind::InvalidParameter, "both fields must contain at least one journal");
  }
}

const std::vector<std::size_t>& FieldPartition::members(int k) const {
  if (k != 1 && k != 2) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("no field {}", k));
  }
  return members_[static_cast<std::size_t>(k - 1)];
}

bool FieldPartition::balanced(const JournalSet& journals) const {
  double totals[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < field_of_.size(); ++i) {
    totals[field_of_[i] - 1] += journals[i].articles_t1;
  }
  return totals[0] == totals[1];
}

namespace {

void require_same_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} covers {} journals, instance has {}", what, actual, expected));
  }
}

}  // namespace

double min_delta(const CitationMatrix& matrix, const FieldPartition& partition) {
  require_same_size(matrix.size(), partition.size(), "partition");
  double delta = 0.0;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const double s = matrix.row_sum(i);
    if (!(s > 0.0)) {
      throw Error(ErrorKind::ZeroOutgoing, fmt::format("journal {} gives no citations", i), i);
    }
    // Summing the out-of-field share directly keeps e.g. 3/1000 exact.
    const auto row = matrix.row(i);
    double cross = 0.0;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (partition.field_of(j) != partition.field_of(i)) cross += row[j];
    }
    delta = std::max(delta, cross / s);
  }
  return delta;
}

std::optional<double> article_growth_ratio(const JournalSet& journals) {
  if (journals.empty()) return std::nullopt;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& j : journals.journals()) {
    if (!(j.articles_t1 > 0.0)) return std::nullopt;
    const double r = j.articles_t2 / j.articles_t1;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (!(lo > 0.0)) return std::nullopt;
  if (hi / lo - 1.0 > 1e-12) return std::nullopt;
  return journals[0].articles_t2 / journals[0].articles_t1;
}

namespace {

double eta_spread(const JournalSet& journals) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& j : journals.journals()) {
    if (!(j.articles_t1 > 0.0)) return std::numeric_limits<double>::infinity();
    const double r = j.articles_t2 / j.articles_t1;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return lo > 0.0 ? hi / lo - 1.0 : std::numeric_limits<double>::infinity();
}

double weighted_mean(const JournalSet& journals, const std::vector<double>& values,
                     const std::vector<std::size_t>& members) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i : members) {
    num += journals[i].articles_t1 * values[i];
    den += journals[i].articles_t1;
  }
  if (!(den > 0.0)) {
    throw Error(ErrorKind::ZeroArticles, "field has no articles in the cited period");
  }
  return num / den;
}

}  // namespace

FieldInsensitivityReport field_insensitivity_check(const Instance& instance,
                                                   const FieldPartition& partition,
                                                   const IndicatorVector& indicator) {
  require_same_size(instance.size(), partition.size(), "partition");
  require_same_size(instance.size(), indicator.size(), "indicator");
  const auto& journals = instance.journals();

  FieldInsensitivityReport report;
  report.delta = min_delta(instance.matrix(), partition);
  report.balanced = partition.balanced(journals);
  report.eta = article_growth_ratio(journals);
  report.eta_deviation = eta_spread(journals);

  std::vector<std::size_t> everyone(instance.size());
  std::iota(everyone.begin(), everyone.end(), 0);
  report.overall_mean = weighted_mean(journals, indicator.values, everyone);
  report.lower_bound = (1.0 - report.delta) * report.overall_mean;
  report.upper_bound = (1.0 + report.delta) * report.overall_mean;
  for (int k = 1; k <= 2; ++k) {
    const double mean = weighted_mean(journals, indicator.values, partition.members(k));
    report.field_means[k - 1] = mean;
    report.bounds_hold[k - 1] = mean >= report.lower_bound * (1.0 - kBoundSlack) &&
                                mean <= report.upper_bound * (1.0 + kBoundSlack);
  }
  return report;
}

LeaveOneOutReport leave_one_out(const Instance& instance, std::size_t dropped,
                                IndicatorKind kind, const IndicatorParams& params,
                                const SolverConfig& config) {
  const auto reduced = drop_journal(instance, dropped);
  const auto before = compute_indicator(instance, kind, params, config);
  const auto after = compute_indicator(reduced, kind, params, config);

  LeaveOneOutReport report;
  report.dropped = dropped;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (i == dropped) continue;
    const std::size_t pos = report.survivors.size();
    report.survivors.push_back(i);
    report.before.push_back(before[i]);
    report.after.push_back(after[pos]);
    if (before[i] > 0.0) {
      const double change = std::abs(after[pos] - before[i]) / before[i];
      report.relative_change.push_back(change);
      report.max_relative_change = std::max(report.max_relative_change, change);
    } else {
      report.relative_change.push_back(std::numeric_limits<double>::quiet_NaN());
      report.zero_before.push_back(pos);
    }
  }
  return report;
}

std::vector<LeaveOneOutReport> leave_one_out_sweep(const Instance& instance, IndicatorKind kind,
                                                   const IndicatorParams& params,
                                                   const SolverConfig& config) {
  std::vector<LeaveOneOutReport> reports;
  reports.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    reports.push_back(leave_one_out(instance, i, kind, params, config));
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return a.max_relative_change > b.max_relative_change;
  });
  return reports;
}

ProportionalityReport proportionality(const std::vector<double>& reference,
                                      const std::vector<double>& candidate, double tolerance) {
  require_same_size(reference.size(), candidate.size(), "candidate vector");
  ProportionalityReport report;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0.0;
  bool defined = true;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (reference[i] == 0.0 && candidate[i] == 0.0) {
      report.ratios.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;  // both vanish, consistent with any constant
    }
    const double r = reference[i] / candidate[i];
    report.ratios.push_back(r);
    if (!std::isfinite(r) || !(r > 0.0)) {
      defined = false;
      continue;
    }
    report.min_ratio = std::min(report.min_ratio, r);
    report.max_ratio = std::max(report.max_ratio, r);
  }
  if (!defined || !(report.max_ratio > 0.0)) {
    report.spread = std::numeric_limits<double>::infinity();
    report.passed = false;
    return report;
  }
  report.spread = report.max_ratio / report.min_ratio - 1.0;
  report.passed = report.spread < tolerance;
  return report;
}

ProportionalityReport verify_theorem1(const Instance& instance, const SolverConfig& config) {
  if (!article_growth_ratio(instance.journals())) {
    throw Error(ErrorKind::PreconditionViolated,
                fmt::format("a_i2 / a_i1 is not constant across journals (spread {:.3e})",
                            eta_spread(instance.journals())));
  }
  const auto af = audience_factor(instance);
  const auto ai = article_influence(instance, EigenParams(0.0), config);
  return proportionality(af.values, ai.values);
}

ProportionalityReport verify_theorem2(const Instance& instance, const SolverConfig& config) {
  auto report = structure(instance.matrix());
  if (!report.irreducible) throw NotIrreducibleError(std::move(report));
  const auto ipp = influence_per_publication(instance, IwNormalization::total_references, config);
  const auto ai = article_influence(instance, EigenParams(1.0), config);
  return proportionality(ipp.values, ai.values);
}

}  // namespace jperf
