#pragma once

// Journal-level data model: journals with per-period article counts, the
// citing -> cited count matrix, and structural analysis of the citation graph.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jperf/errors.hpp"

namespace jperf {

struct Journal {
  std::string id;
  std::string name;
  double articles_t1 = 0.0;  // articles published in the cited period
  double articles_t2 = 0.0;  // articles published in the citing period
};

/// Ordered journal list. The order defines the index used by every matrix
/// and indicator vector.
class JournalSet {
 public:
  JournalSet() = default;
  explicit JournalSet(std::vector<Journal> journals);

  std::size_t size() const noexcept { return journals_.size(); }
  bool empty() const noexcept { return journals_.empty(); }
  const Journal& operator[](std::size_t i) const { return journals_[i]; }
  const Journal& at(std::size_t i) const { return journals_.at(i); }
  std::span<const Journal> journals() const noexcept { return journals_; }

  std::optional<std::size_t> index_of(const std::string& id) const;

  std::vector<double> articles_t1() const;
  std::vector<double> articles_t2() const;

  bool operator==(const JournalSet& other) const;

 private:
  std::vector<Journal> journals_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Dense n x n citation counts; row = citing journal, column = cited journal.
/// Row sums s_i are cached and kept in sync by set().
class CitationMatrix {
 public:
  CitationMatrix() = default;
  explicit CitationMatrix(std::size_t n);
  CitationMatrix(std::size_t n, std::vector<double> row_major_counts);
  static CitationMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t citing, std::size_t cited) const {
    return counts_[citing * n_ + cited];
  }
  void set(std::size_t citing, std::size_t cited, double value);

  std::span<const double> row(std::size_t citing) const {
    return {counts_.data() + citing * n_, n_};
  }
  double row_sum(std::size_t i) const { return row_sums_[i]; }
  std::span<const double> row_sums() const noexcept { return row_sums_; }
  double column_sum(std::size_t j) const;
  double total() const;

  /// True when the cached row sums match a fresh recomputation exactly.
  bool row_sums_consistent() const;

  CitationMatrix scaled(double factor) const;
  bool operator==(const CitationMatrix& other) const {
    return n_ == other.n_ && counts_ == other.counts_;
  }

 private:
  void recompute_row(std::size_t i);

  std::size_t n_ = 0;
  std::vector<double> counts_;
  std::vector<double> row_sums_;
};

/// A validated (JournalSet, CitationMatrix) pair. Only validate() and the
/// operations that derive new instances from a valid one can create it.
class Instance {
 public:
  const JournalSet& journals() const noexcept { return journals_; }
  const CitationMatrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return journals_.size(); }

  bool operator==(const Instance& other) const = default;

 private:
  Instance(JournalSet journals, CitationMatrix matrix)
      : journals_(std::move(journals)), matrix_(std::move(matrix)) {}

  friend Instance validate(JournalSet journals, CitationMatrix matrix);
  friend Instance drop_journal(const Instance& instance, std::size_t index);

  JournalSet journals_;
  CitationMatrix matrix_;
};

/// All problems with a candidate instance; empty when it is valid.
std::vector<Violation> find_violations(const JournalSet& journals,
                                       const CitationMatrix& matrix);

/// Throws ValidationError listing every violation.
Instance validate(JournalSet journals, CitationMatrix matrix);

/// Removes journal `index` (row and column); row sums are recomputed.
Instance drop_journal(const Instance& instance, std::size_t index);

struct StructureReport {
  bool irreducible = false;
  bool aperiodic = false;
  std::size_t period = 0;  // gcd of cycle lengths; 0 when the graph has no cycle
  std::vector<std::size_t> dangling_rows;
  std::vector<std::size_t> zero_columns;
  /// Strongly connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components;
};

StructureReport structure(const CitationMatrix& matrix);

class NotIrreducibleError : public Error {
 public:
  explicit NotIrreducibleError(StructureReport report);
  const StructureReport& report() const noexcept { return report_; }

 private:
  StructureReport report_;
};

}  // namespace jperf
