#include "jperf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace jperf {

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::automatic: return "auto";
    case SolveMethod::direct: return "direct";
    case SolveMethod::power: return "power";
  }
  return "unknown";
}

void SolverConfig::check() const {
  if (!(tolerance > 0.0)) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("solver tolerance must be positive, got {}", tolerance));
  }
  if (max_iterations < 1) {
    throw Error(ErrorKind::InvalidParameter, "solver max_iterations must be at least 1");
  }
}

void require_outgoing(const CitationMatrix& matrix) {
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    if (!(matrix.row_sum(j) > 0.0)) {
      throw Error(ErrorKind::ZeroOutgoing,
                  fmt::format("journal {} gives no citations (s_j = 0)", j), j);
    }
  }
}

std::vector<double> apply_citation_operator(const CitationMatrix& matrix,
                                            std::span<const double> x) {
  const std::size_t n = matrix.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double w = x[j] / matrix.row_sum(j);
    if (w == 0.0) continue;
    const auto row = matrix.row(j);
    for (std::size_t i = 0; i < n; ++i) y[i] += row[i] * w;
  }
  return y;
}

namespace {

double l1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

std::vector<double> affine_step(const CitationMatrix& matrix, double alpha,
                                std::span<const double> teleport, std::span<const double> x) {
  auto y = apply_citation_operator(matrix, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = alpha * y[i] + (1.0 - alpha) * teleport[i];
  return y;
}

double relative_residual(const CitationMatrix& matrix, double alpha,
                         std::span<const double> teleport, std::span<const double> x) {
  const auto y = affine_step(matrix, alpha, teleport, x);
  double diff = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) diff += std::abs(y[i] - x[i]);
  return diff / l1(x);
}

void normalize_probability(std::vector<double>& v) {
  for (auto& x : v) x = std::max(x, 0.0);
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= sum;
}

StationaryResult solve_direct(const CitationMatrix& matrix, double alpha,
                              std::span<const double> teleport) {
  const auto n = static_cast<Eigen::Index>(matrix.size());
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double inv = alpha / matrix.row_sum(static_cast<std::size_t>(j));
    for (Eigen::Index i = 0; i < n; ++i) {
      system(i, j) -= matrix(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) * inv;
    }
  }
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs(i) = (1.0 - alpha) * teleport[static_cast<std::size_t>(i)];
  if (alpha == 1.0) {
    // Singular by construction; swap one balance equation for sum(p) = 1.
    system.row(n - 1).setOnes();
    rhs(n - 1) = 1.0;
  }
  const Eigen::VectorXd solution = system.partialPivLu().solve(rhs);

  StationaryResult result;
  result.vector.assign(solution.data(), solution.data() + n);
  normalize_probability(result.vector);
  result.report.iterations = 0;
  result.report.method_used = SolveMethod::direct;
  result.report.residual = relative_residual(matrix, alpha, teleport, result.vector);
  return result;
}

StationaryResult solve_power(const CitationMatrix& matrix, double alpha,
                             std::span<const double> teleport, bool lazy,
                             const SolverConfig& config) {
  std::vector<double> x(teleport.begin(), teleport.end());
  double change = 0.0;
  constexpr std::size_t kWindow = 16;
  std::vector<double> history;  // step sizes, oldest first, at most kWindow + 1
  const double noise_floor = 64.0 * std::numeric_limits<double>::epsilon();
  for (std::size_t it = 1; it <= config.max_iterations; ++it) {
    auto y = affine_step(matrix, alpha, teleport, x);
    if (lazy) {
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = 0.5 * (y[i] + x[i]);
    }
    const double sum = std::accumulate(y.begin(), y.end(), 0.0);
    for (auto& v : y) v /= sum;
    double diff = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) diff += std::abs(y[i] - x[i]);
    change = diff / l1(y);
    x = std::move(y);
    history.push_back(change);
    if (history.size() > kWindow + 1) history.erase(history.begin());
    // A small step is not enough when the chain mixes slowly: the distance
    // left to the fixed point is about change * rho / (1 - rho), with rho the
    // contraction rate (geometric mean over the recent steps).
    bool done = change < config.tolerance;
    if (done && history.size() > 1 && change > noise_floor && history.front() > 0.0) {
      const double span = static_cast<double>(history.size() - 1);
      const double rho = std::pow(change / history.front(), 1.0 / span);
      done = rho >= 1.0 || change * rho / (1.0 - rho) < config.tolerance;
    }
    if (done) {
      StationaryResult result{std::move(x), {}};
      result.report.iterations = it;
      result.report.residual = change;
      result.report.method_used = SolveMethod::power;
      result.report.lazy = lazy;
      return result;
    }
  }
  throw NoConvergenceError(config.max_iterations, change);
}

}  // namespace

StationaryResult stationary(const CitationMatrix& matrix, double alpha,
                            std::span<const double> teleport, const SolverConfig& config) {
  config.check();
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorKind::DegenerateInput, "empty citation matrix");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("alpha must lie in [0, 1], got {}", alpha));
  }
  if (teleport.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("teleport vector has {} entries, expected {}", teleport.size(), n));
  }
  const double teleport_sum = std::accumulate(teleport.begin(), teleport.end(), 0.0);
  if (std::abs(teleport_sum - 1.0) > 1e-12 ||
      std::any_of(teleport.begin(), teleport.end(), [](double t) { return !(t >= 0.0); })) {
    throw Error(ErrorKind::InvalidParameter, "teleport vector must be a probability vector");
  }
  require_outgoing(matrix);

  if (alpha == 0.0) {
    StationaryResult result{{teleport.begin(), teleport.end()}, {}};
    result.report.method_used = SolveMethod::direct;
    return result;
  }

  bool lazy = false;
  if (alpha == 1.0) {
    auto report = structure(matrix);
    if (!report.irreducible) throw NotIrreducibleError(std::move(report));
    lazy = !report.aperiodic;
  }

  SolveMethod method = config.method;
  if (method == SolveMethod::automatic) {
    method = n <= config.direct_limit ? SolveMethod::direct : SolveMethod::power;
  }
  if (method == SolveMethod::direct) return solve_direct(matrix, alpha, teleport);
  return solve_power(matrix, alpha, teleport, lazy, config);
}

StationaryResult solve_iw_eigensystem(const CitationMatrix& matrix, const SolverConfig& config) {
  const std::size_t n = matrix.size();
  const std::vector<double> uniform(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  // q_i = IW_i s_i is the stationary vector of H; divide s back out.
  auto result = stationary(matrix, 1.0, uniform, config);
  for (std::size_t i = 0; i < n; ++i) result.vector[i] /= matrix.row_sum(i);
  return result;
}

}  // namespace jperf
