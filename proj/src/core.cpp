#include "jperf/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_set>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace jperf {

// ---------------------------------------------------------------------------
// JournalSet

JournalSet::JournalSet(std::vector<Journal> journals) : journals_(std::move(journals)) {
  for (std::size_t i = 0; i < journals_.size(); ++i) {
    index_.emplace(journals_[i].id, i);  // first occurrence wins; duplicates caught by validate
  }
}

std::optional<std::size_t> JournalSet::index_of(const std::string& id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<double> JournalSet::articles_t1() const {
  std::vector<double> out;
  out.reserve(journals_.size());
  for (const auto& j : journals_) out.push_back(j.articles_t1);
  return out;
}

std::vector<double> JournalSet::articles_t2() const {
  std::vector<double> out;
  out.reserve(journals_.size());
  for (const auto& j : journals_) out.push_back(j.articles_t2);
  return out;
}

bool JournalSet::operator==(const JournalSet& other) const {
  if (journals_.size() != other.journals_.size()) return false;
  for (std::size_t i = 0; i < journals_.size(); ++i) {
    const auto& a = journals_[i];
    const auto& b = other.journals_[i];
    if (a.id != b.id || a.name != b.name || a.articles_t1 != b.articles_t1 ||
        a.articles_t2 != b.articles_t2) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// CitationMatrix

CitationMatrix::CitationMatrix(std::size_t n) : n_(n), counts_(n * n, 0.0), row_sums_(n, 0.0) {}

CitationMatrix::CitationMatrix(std::size_t n, std::vector<double> row_major_counts)
    : n_(n), counts_(std::move(row_major_counts)), row_sums_(n, 0.0) {
  if (counts_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("expected {} counts for a {}x{} matrix, got {}", n * n, n, n,
                            counts_.size()));
  }
  for (std::size_t i = 0; i < n_; ++i) recompute_row(i);
}

CitationMatrix CitationMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("row {} has {} entries, expected {}", i, rows[i].size(), n), i);
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return CitationMatrix(n, std::move(flat));
}

void CitationMatrix::set(std::size_t citing, std::size_t cited, double value) {
  if (citing >= n_ || cited >= n_) {
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("cell ({}, {}) outside {}x{} matrix", citing, cited, n_, n_));
  }
  counts_[citing * n_ + cited] = value;
  recompute_row(citing);
}

void CitationMatrix::recompute_row(std::size_t i) {
  const auto r = row(i);
  row_sums_[i] = std::accumulate(r.begin(), r.end(), 0.0);
}

double CitationMatrix::column_sum(std::size_t j) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, j);
  return sum;
}

double CitationMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0.0);
}

bool CitationMatrix::row_sums_consistent() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = row(i);
    if (std::accumulate(r.begin(), r.end(), 0.0) != row_sums_[i]) return false;
  }
  return true;
}

CitationMatrix CitationMatrix::scaled(double factor) const {
  std::vector<double> out(counts_);
  for (auto& c : out) c *= factor;
  return CitationMatrix(n_, std::move(out));
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> find_violations(const JournalSet& journals,
                                       const CitationMatrix& matrix) {
  std::vector<Violation> out;
  const std::size_t n = journals.size();
  if (matrix.size() != n) {
    out.push_back({ErrorKind::DimensionMismatch,
                   fmt::format("{} journals but a {}x{} citation matrix", n, matrix.size(),
                               matrix.size()),
                   std::nullopt, std::nullopt});
  }

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& j = journals[i];
    if (j.id.empty()) {
      out.push_back({ErrorKind::EmptyId, fmt::format("journal at index {} has an empty id", i), i,
                     std::nullopt});
    } else if (!seen.insert(j.id).second) {
      out.push_back({ErrorKind::DuplicateId,
                     fmt::format("journal id '{}' repeated at index {}", j.id, i), i,
                     std::nullopt});
    }
    for (double a : {j.articles_t1, j.articles_t2}) {
      if (!std::isfinite(a) || a < 0.0) {
        out.push_back({ErrorKind::NegativeCount,
                       fmt::format("journal '{}' has invalid article count {}", j.id, a), i,
                       std::nullopt});
        break;
      }
    }
  }

  const std::size_t m = matrix.size();
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const double v = matrix(r, c);
      if (!std::isfinite(v)) {
        out.push_back({ErrorKind::NonFiniteCount,
                       fmt::format("non-finite count at ({}, {})", r, c), r, c});
      } else if (v < 0.0) {
        out.push_back({ErrorKind::NegativeCount,
                       fmt::format("negative count {} at ({}, {})", v, r, c), r, c});
      }
    }
  }
  return out;
}

Instance validate(JournalSet journals, CitationMatrix matrix) {
  auto violations = find_violations(journals, matrix);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return Instance(std::move(journals), std::move(matrix));
}

Instance drop_journal(const Instance& instance, std::size_t index) {
  const std::size_t n = instance.size();
  if (index >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("cannot drop journal {} from an instance of {}", index, n), index);
  }
  if (n < 2) {
    throw Error(ErrorKind::PreconditionViolated, "cannot drop the only journal", index);
  }
  std::vector<Journal> kept;
  kept.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != index) kept.push_back(instance.journals()[i]);
  }
  std::vector<double> counts;
  counts.reserve((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (r == index) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != index) counts.push_back(instance.matrix()(r, c));
    }
  }
  return Instance(JournalSet(std::move(kept)), CitationMatrix(n - 1, std::move(counts)));
}

// ---------------------------------------------------------------------------
// Structure

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency adjacency(const CitationMatrix& m) {
  Adjacency adj(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j) != 0.0) adj[i].push_back(j);
    }
  }
  return adj;
}

// Iterative Tarjan. Returns the component id of every node.
std::vector<std::size_t> strongly_connected(const Adjacency& adj, std::size_t& count) {
  const std::size_t n = adj.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
  std::size_t next_index = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < adj[v].size()) {
        const std::size_t w = adj[v][e++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

StructureReport structure(const CitationMatrix& matrix) {
  StructureReport report;
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix.row_sum(i) == 0.0) report.dangling_rows.push_back(i);
    if (matrix.column_sum(i) == 0.0) report.zero_columns.push_back(i);
  }
  if (n == 0) return report;

  const auto adj = adjacency(matrix);
  std::size_t count = 0;
  const auto comp = strongly_connected(adj, count);

  report.components.assign(count, {});
  for (std::size_t v = 0; v < n; ++v) report.components[comp[v]].push_back(v);
  std::sort(report.components.begin(), report.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  report.irreducible = count == 1 && !adj[0].empty();

  // Period: BFS levels inside each component; every intra-component edge
  // u -> v contributes level(u) + 1 - level(v) to the gcd.
  std::size_t period = 0;
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, unseen);
  for (const auto& members : report.components) {
    const std::size_t root = members.front();
    level[root] = 0;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj[u]) {
        if (comp[v] != comp[u]) continue;
        if (level[v] == unseen) {
          level[v] = level[u] + 1;
          queue.push(v);
        } else {
          const auto diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[v]);
          period = std::gcd(period, static_cast<std::size_t>(std::llabs(diff)));
        }
      }
    }
  }
  report.period = period;
  report.aperiodic = period == 1;
  return report;
}

NotIrreducibleError::NotIrreducibleError(StructureReport report)
    : Error(ErrorKind::NotIrreducible,
            fmt::format("citation graph is not irreducible ({} strongly connected components)",
                        report.components.size())),
      report_(std::move(report)) {}

}  // namespace jperf
