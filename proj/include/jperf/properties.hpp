#pragma once

// Two-field insensitivity checks, leave-one-out coverage sensitivity, and
// numerical checks of the endpoint proportionalities of article influence.

#include <array>
#include <optional>
#include <vector>

#include "jperf/core.hpp"
#include "jperf/indicators.hpp"

namespace jperf {

/// Assignment of every journal to field 1 or field 2.
class FieldPartition {
 public:
  /// `field_of[i]` must be 1 or 2 and both fields must be non-empty.
  explicit FieldPartition(std::vector<int> field_of);

  std::size_t size() const noexcept { return field_of_.size(); }
  int field_of(std::size_t i) const { return field_of_[i]; }
  std::span<const int> fields() const noexcept { return field_of_; }
  /// Indices of field k (k = 1 or 2), ascending.
  const std::vector<std::size_t>& members(int k) const;

  /// Equal a_i1 totals in both fields.
  bool balanced(const JournalSet& journals) const;

 private:
  std::vector<int> field_of_;
  std::array<std::vector<std::size_t>, 2> members_;
};

/// Smallest delta such that every journal sends at least (1 - delta) of its
/// references to its own field.
double min_delta(const CitationMatrix& matrix, const FieldPartition& partition);

struct FieldInsensitivityReport {
  double delta = 0.0;
  std::array<double, 2> field_means{};  // a_i1-weighted
  double overall_mean = 0.0;
  double lower_bound = 0.0;  // (1 - delta) * overall_mean
  double upper_bound = 0.0;  // (1 + delta) * overall_mean
  std::array<bool, 2> bounds_hold{};
  bool balanced = false;
  std::optional<double> eta;      // a_i2 / a_i1 when constant
  double eta_deviation = 0.0;     // max relative spread of a_i2 / a_i1

  bool holds() const noexcept { return bounds_hold[0] && bounds_hold[1]; }
};

/// Relative slack used when comparing field means against the bounds.
inline constexpr double kBoundSlack = 1e-12;

FieldInsensitivityReport field_insensitivity_check(const Instance& instance,
                                                   const FieldPartition& partition,
                                                   const IndicatorVector& indicator);

struct LeaveOneOutReport {
  std::size_t dropped = 0;
  std::vector<std::size_t> survivors;  // original indices, aligned with before/after
  std::vector<double> before;
  std::vector<double> after;
  std::vector<double> relative_change;         // NaN where before == 0
  std::vector<std::size_t> zero_before;        // positions (into survivors) with before == 0
  double max_relative_change = 0.0;
};

LeaveOneOutReport leave_one_out(const Instance& instance, std::size_t dropped,
                                IndicatorKind kind, const IndicatorParams& params = {},
                                const SolverConfig& config = {});

/// Leave-one-out for every journal, sorted by max_relative_change descending
/// (ties by dropped index).
std::vector<LeaveOneOutReport> leave_one_out_sweep(const Instance& instance, IndicatorKind kind,
                                                   const IndicatorParams& params = {},
                                                   const SolverConfig& config = {});

struct ProportionalityReport {
  std::vector<double> ratios;  // reference_i / article_influence_i
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double spread = 0.0;         // max / min - 1
  bool passed = false;
};

inline constexpr double kProportionalityTolerance = 1e-9;

ProportionalityReport proportionality(const std::vector<double>& reference,
                                      const std::vector<double>& candidate,
                                      double tolerance = kProportionalityTolerance);

/// AF against AI(alpha = 0). Requires a_i2 = eta * a_i1 for a single eta.
ProportionalityReport verify_theorem1(const Instance& instance, const SolverConfig& config = {});

/// IPP against AI(alpha = 1). Requires an irreducible matrix.
ProportionalityReport verify_theorem2(const Instance& instance, const SolverConfig& config = {});

/// a_i2 / a_i1 when it is the same for all journals (relative tolerance 1e-12).
std::optional<double> article_growth_ratio(const JournalSet& journals);

}  // namespace jperf
