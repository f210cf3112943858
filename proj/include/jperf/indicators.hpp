#pragma once

// Journal performance indicators: impact factor, audience factor, influence
// weight / influence per publication, Eigenfactor / article influence,
// weighted PageRank and SCImago Journal Rank.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jperf/core.hpp"
#include "jperf/spectral.hpp"

namespace jperf {

enum class IndicatorKind { IF, AF, IW, IPP, EF, AI, WPR, SJR };
enum class Basis { per_article, per_reference, total };

std::string_view to_string(IndicatorKind kind);
std::string_view to_string(Basis basis);
std::optional<IndicatorKind> parse_indicator_kind(std::string_view text);
Basis basis_of(IndicatorKind kind);

/// Damping parameter of the Eigenfactor recursion.
class EigenParams {
 public:
  explicit EigenParams(double alpha = 0.85);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// (beta, gamma) of the weighted PageRank recursion; beta + gamma <= 1.
class PageRankParams {
 public:
  PageRankParams(double beta, double gamma);
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

  static PageRankParams scimago_default() { return {0.9, 0.0999}; }

 private:
  double beta_;
  double gamma_;
};

/// Scale convention for influence weights.
///   total_references: sum_i IW_i s_i / sum_i s_i = 1
///   mean_references:  sum_i IW_i s_i / sum_i s_i = 1 / n, i.e. the weighted
///                     references add up to the mean reference count. This is
///                     the scale of the classic 8-journal worked example and
///                     keeps IPP stable when a journal is removed.
enum class IwNormalization { total_references, mean_references };

std::string_view to_string(IwNormalization normalization);
std::optional<IwNormalization> parse_iw_normalization(std::string_view text);

struct IndicatorParams {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<IwNormalization> iw_normalization;
};

struct IndicatorVector {
  IndicatorKind kind = IndicatorKind::IF;
  IndicatorParams params;
  Basis basis = Basis::per_article;
  std::vector<double> values;
  std::optional<SolverReport> solver;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  /// Short label such as "AI(0.85)" or "SJR(0.9,0.0999)".
  std::string label() const;
};

IndicatorVector impact_factor(const Instance& instance);
IndicatorVector audience_factor(const Instance& instance);

IndicatorVector influence_weights(const Instance& instance,
                                  IwNormalization normalization = IwNormalization::total_references,
                                  const SolverConfig& config = {});
IndicatorVector influence_per_publication(
    const Instance& instance, IwNormalization normalization = IwNormalization::total_references,
    const SolverConfig& config = {});

/// Eigenfactor scores together with the underlying visit probabilities p.
struct EigenfactorResult {
  IndicatorVector scores;
  std::vector<double> visit_probabilities;
};

EigenfactorResult eigenfactor_detail(const Instance& instance, EigenParams params,
                                     const SolverConfig& config = {});
IndicatorVector eigenfactor(const Instance& instance, EigenParams params = EigenParams{},
                            const SolverConfig& config = {});
IndicatorVector article_influence(const Instance& instance, EigenParams params = EigenParams{},
                                  const SolverConfig& config = {});

IndicatorVector weighted_pagerank(const Instance& instance, PageRankParams params,
                                  const SolverConfig& config = {});
IndicatorVector scimago_jr(const Instance& instance,
                           PageRankParams params = PageRankParams::scimago_default(),
                           const SolverConfig& config = {});

/// Dispatch on kind; missing parameters take the indicator's defaults
/// (alpha 0.85; WPR beta 0.85, gamma 0; SJR 0.9 / 0.0999).
IndicatorVector compute_indicator(const Instance& instance, IndicatorKind kind,
                                  const IndicatorParams& params = {},
                                  const SolverConfig& config = {});

/// Throws ZeroArticles naming the first journal with a_i1 = 0.
void require_articles_t1(const JournalSet& journals);

}  // namespace jperf
