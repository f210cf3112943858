#include "jperf/indicators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace jperf {

std::string_view to_string(IndicatorKind kind) {
  switch (kind) {
    case IndicatorKind::IF: return "IF";
    case IndicatorKind::AF: return "AF";
    case IndicatorKind::IW: return "IW";
    case IndicatorKind::IPP: return "IPP";
    case IndicatorKind::EF: return "EF";
    case IndicatorKind::AI: return "AI";
    case IndicatorKind::WPR: return "WPR";
    case IndicatorKind::SJR: return "SJR";
  }
  return "?";
}

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::per_article: return "per_article";
    case Basis::per_reference: return "per_reference";
    case Basis::total: return "total";
  }
  return "?";
}

std::optional<IndicatorKind> parse_indicator_kind(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "if") return IndicatorKind::IF;
  if (lower == "af") return IndicatorKind::AF;
  if (lower == "iw") return IndicatorKind::IW;
  if (lower == "ipp") return IndicatorKind::IPP;
  if (lower == "ef") return IndicatorKind::EF;
  if (lower == "ai") return IndicatorKind::AI;
  if (lower == "wpr") return IndicatorKind::WPR;
  if (lower == "sjr") return IndicatorKind::SJR;
  return std::nullopt;
}

Basis basis_of(IndicatorKind kind) {
  switch (kind) {
    case IndicatorKind::IW: return Basis::per_reference;
    case IndicatorKind::EF:
    case IndicatorKind::WPR: return Basis::total;
    default: return Basis::per_article;
  }
}

std::string_view to_string(IwNormalization normalization) {
  switch (normalization) {
    case IwNormalization::total_references: return "total";
    case IwNormalization::mean_references: return "mean";
  }
  return "?";
}

std::optional<IwNormalization> parse_iw_normalization(std::string_view text) {
  if (text == "total") return IwNormalization::total_references;
  if (text == "mean") return IwNormalization::mean_references;
  return std::nullopt;
}

EigenParams::EigenParams(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("alpha must lie in [0, 1], got {}", alpha));
  }
}

PageRankParams::PageRankParams(double beta, double gamma) : beta_(beta), gamma_(gamma) {
  if (!(beta >= 0.0 && beta <= 1.0 && gamma >= 0.0 && gamma <= 1.0)) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("beta and gamma must lie in [0, 1], got ({}, {})", beta, gamma));
  }
  if (beta + gamma > 1.0 + 1e-15) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("beta + gamma must not exceed 1, got {}", beta + gamma));
  }
}

std::string IndicatorVector::label() const {
  switch (kind) {
    case IndicatorKind::EF:
    case IndicatorKind::AI:
      return fmt::format("{}({})", to_string(kind), params.alpha.value_or(0.85));
    case IndicatorKind::WPR:
    case IndicatorKind::SJR:
      return fmt::format("{}({},{})", to_string(kind), params.beta.value_or(0.0),
                         params.gamma.value_or(0.0));
    default: return std::string(to_string(kind));
  }
}

void require_articles_t1(const JournalSet& journals) {
  for (std::size_t i = 0; i < journals.size(); ++i) {
    if (!(journals[i].articles_t1 > 0.0)) {
      throw Error(ErrorKind::ZeroArticles,
                  fmt::format("journal '{}' has no articles in the cited period", journals[i].id), i);
    }
  }
}

namespace {

IndicatorVector make_vector(IndicatorKind kind, std::vector<double> values) {
  IndicatorVector v;
  v.kind = kind;
  v.basis = basis_of(kind);
  v.values = std::move(values);
  return v;
}

std::vector<double> article_shares(const JournalSet& journals) {
  auto a = journals.articles_t1();
  const double total = std::accumulate(a.begin(), a.end(), 0.0);
  if (!(total > 0.0)) {
    throw Error(ErrorKind::ZeroArticles, "no journal has articles in the cited period");
  }
  for (auto& x : a) x /= total;
  return a;
}

}  // namespace

IndicatorVector impact_factor(const Instance& instance) {
  const auto& journals = instance.journals();
  require_articles_t1(journals);
  std::vector<double> values(instance.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = instance.matrix().column_sum(i) / journals[i].articles_t1;
  }
  return make_vector(IndicatorKind::IF, std::move(values));
}

IndicatorVector audience_factor(const Instance& instance) {
  const auto& journals = instance.journals();
  const auto& matrix = instance.matrix();
  const std::size_t n = instance.size();
  require_articles_t1(journals);
  require_outgoing(matrix);
  for (std::size_t j = 0; j < n; ++j) {
    if (!(journals[j].articles_t2 > 0.0)) {
      throw Error(ErrorKind::ZeroArticlesT2,
                  fmt::format("journal '{}' has no articles in the citing period", journals[j].id),
                  j);
    }
  }

  double total_refs = 0.0;
  double total_articles_t2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    total_refs += matrix.row_sum(j);
    total_articles_t2 += journals[j].articles_t2;
  }
  const double mean_refs = total_refs / total_articles_t2;  // m_S

  // Citation weight of citing journal j is m_S / m_j with m_j = s_j / a_j2.
  std::vector<double> weight(n);
  for (std::size_t j = 0; j < n; ++j) {
    weight[j] = mean_refs / (matrix.row_sum(j) / journals[j].articles_t2);
  }
  std::vector<double> values(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto row = matrix.row(j);
    for (std::size_t i = 0; i < n; ++i) values[i] += weight[j] * row[i];
  }
  for (std::size_t i = 0; i < n; ++i) values[i] /= journals[i].articles_t1;
  return make_vector(IndicatorKind::AF, std::move(values));
}

IndicatorVector influence_weights(const Instance& instance, IwNormalization normalization,
                                  const SolverConfig& config) {
  const auto& matrix = instance.matrix();
  require_outgoing(matrix);
  auto solved = solve_iw_eigensystem(matrix, config);

  // solve_iw_eigensystem returns sum_i IW_i s_i = 1; rescale to the convention.
  double scale = matrix.total();
  if (normalization == IwNormalization::mean_references) {
    scale /= static_cast<double>(instance.size());
  }
  for (auto& v : solved.vector) v *= scale;

  auto out = make_vector(IndicatorKind::IW, std::move(solved.vector));
  out.params.iw_normalization = normalization;
  out.solver = solved.report;
  return out;
}

IndicatorVector influence_per_publication(const Instance& instance,
                                          IwNormalization normalization,
                                          const SolverConfig& config) {
  require_articles_t1(instance.journals());
  auto iw = influence_weights(instance, normalization, config);
  for (std::size_t i = 0; i < iw.values.size(); ++i) {
    iw.values[i] *= instance.matrix().row_sum(i) / instance.journals()[i].articles_t1;
  }
  iw.kind = IndicatorKind::IPP;
  iw.basis = basis_of(IndicatorKind::IPP);
  return iw;
}

EigenfactorResult eigenfactor_detail(const Instance& instance, EigenParams params,
                                     const SolverConfig& config) {
  const auto& matrix = instance.matrix();
  require_outgoing(matrix);
  const auto teleport = article_shares(instance.journals());
  auto solved = stationary(matrix, params.alpha(), teleport, config);

  auto scores = apply_citation_operator(matrix, solved.vector);
  for (auto& s : scores) s *= 100.0;

  EigenfactorResult result{make_vector(IndicatorKind::EF, std::move(scores)),
                           std::move(solved.vector)};
  result.scores.params.alpha = params.alpha();
  result.scores.solver = solved.report;
  return result;
}

IndicatorVector eigenfactor(const Instance& instance, EigenParams params,
                            const SolverConfig& config) {
  return eigenfactor_detail(instance, params, config).scores;
}

IndicatorVector article_influence(const Instance& instance, EigenParams params,
                                  const SolverConfig& config) {
  require_articles_t1(instance.journals());
  auto ef = eigenfactor(instance, params, config);
  for (std::size_t i = 0; i < ef.values.size(); ++i) {
    ef.values[i] /= 100.0 * instance.journals()[i].articles_t1;
  }
  ef.kind = IndicatorKind::AI;
  ef.basis = basis_of(IndicatorKind::AI);
  return ef;
}

IndicatorVector weighted_pagerank(const Instance& instance, PageRankParams params,
                                  const SolverConfig& config) {
  const auto& matrix = instance.matrix();
  const std::size_t n = instance.size();
  require_outgoing(matrix);

  // r = beta H r + gamma a_share + (1 - beta - gamma) / n, rewritten as a
  // damped walk with teleport t = (gamma a_share + (1 - beta - gamma) / n) / (1 - beta).
  std::vector<double> teleport(n, 1.0 / static_cast<double>(n));
  const double beta = params.beta();
  if (beta < 1.0) {
    const double uniform_weight = std::max(0.0, 1.0 - beta - params.gamma());
    std::vector<double> shares(n, 0.0);
    if (params.gamma() > 0.0) shares = article_shares(instance.journals());
    for (std::size_t i = 0; i < n; ++i) {
      teleport[i] =
          (params.gamma() * shares[i] + uniform_weight / static_cast<double>(n)) / (1.0 - beta);
    }
    const double sum = std::accumulate(teleport.begin(), teleport.end(), 0.0);
    for (auto& t : teleport) t /= sum;
  }
  auto solved = stationary(matrix, beta, teleport, config);

  auto out = make_vector(IndicatorKind::WPR, std::move(solved.vector));
  out.params.beta = params.beta();
  out.params.gamma = params.gamma();
  out.solver = solved.report;
  return out;
}

IndicatorVector scimago_jr(const Instance& instance, PageRankParams params,
                           const SolverConfig& config) {
  require_articles_t1(instance.journals());
  auto r = weighted_pagerank(instance, params, config);
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    r.values[i] /= instance.journals()[i].articles_t1;
  }
  r.kind = IndicatorKind::SJR;
  r.basis = basis_of(IndicatorKind::SJR);
  return r;
}

IndicatorVector compute_indicator(const Instance& instance, IndicatorKind kind,
                                  const IndicatorParams& params, const SolverConfig& config) {
  const auto normalization = params.iw_normalization.value_or(IwNormalization::total_references);
  switch (kind) {
    case IndicatorKind::IF: return impact_factor(instance);
    case IndicatorKind::AF: return audience_factor(instance);
    case IndicatorKind::IW: return influence_weights(instance, normalization, config);
    case IndicatorKind::IPP: return influence_per_publication(instance, normalization, config);
    case IndicatorKind::EF:
      return eigenfactor(instance, EigenParams(params.alpha.value_or(0.85)), config);
    case IndicatorKind::AI:
      return article_influence(instance, EigenParams(params.alpha.value_or(0.85)), config);
    case IndicatorKind::WPR:
      return weighted_pagerank(
          instance, PageRankParams(params.beta.value_or(0.85), params.gamma.value_or(0.0)), config);
    case IndicatorKind::SJR: {
      const auto d = PageRankParams::scimago_default();
      return scimago_jr(instance,
                        PageRankParams(params.beta.value_or(d.beta()),
                                       params.gamma.value_or(d.gamma())),
                        config);
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown indicator kind");
}

}  // namespace jperf
