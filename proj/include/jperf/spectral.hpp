#pragma once

// Fixed points of the citation random walk. The operator H has entries
// H(i, j) = c_ji / s_j, i.e. column j spreads journal j's weight over the
// journals it cites in proportion to its references. H is column-stochastic
// whenever every s_j > 0.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "jperf/core.hpp"

namespace jperf {

enum class SolveMethod { automatic, direct, power };

std::string_view to_string(SolveMethod method);

struct SolverConfig {
  double tolerance = 1e-12;           // relative L1 change between iterates
  std::size_t max_iterations = 100000;
  SolveMethod method = SolveMethod::automatic;
  std::size_t direct_limit = 64;      // automatic picks direct up to this n

  void check() const;
};

struct SolverReport {
  std::size_t iterations = 0;
  double residual = 0.0;
  SolveMethod method_used = SolveMethod::direct;
  bool lazy = false;  // half-lazy operator used for a periodic chain
};

struct StationaryResult {
  std::vector<double> vector;
  SolverReport report;
};

/// y = H x, with H built from `matrix`. Requires every row sum > 0.
std::vector<double> apply_citation_operator(const CitationMatrix& matrix,
                                            std::span<const double> x);

/// Solves p = alpha H p + (1 - alpha) teleport with sum(p) = 1.
/// `teleport` must be a probability vector. At alpha = 1 the matrix must be
/// irreducible; a periodic chain is iterated with (I + H) / 2, which has the
/// same fixed point.
StationaryResult stationary(const CitationMatrix& matrix, double alpha,
                            std::span<const double> teleport, const SolverConfig& config = {});

/// Positive solution of IW_i = sum_j IW_j c_ji / s_i, defined up to scale.
/// Returned scaled so that sum_i IW_i s_i = 1; callers apply their own
/// normalization.
StationaryResult solve_iw_eigensystem(const CitationMatrix& matrix,
                                      const SolverConfig& config = {});

/// Throws ZeroOutgoing naming the first journal with s_j = 0.
void require_outgoing(const CitationMatrix& matrix);

}  // namespace jperf
