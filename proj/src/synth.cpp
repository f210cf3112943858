#include "jperf/synth.hpp"

#include <cmath>

#include <fmt/format.h>

namespace jperf {

double FixtureRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t FixtureRng::integer(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  return span == 0 ? engine_() : lo + engine_() % span;
}

std::uint64_t FixtureRng::poisson(double mean) {
  if (mean <= 0.0) return 0;
  const double u = uniform();
  double p = std::exp(-mean);
  double cdf = p;
  std::uint64_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
    if (p == 0.0 && static_cast<double>(k) > mean) break;  // tail exhausted numerically
  }
  return k;
}

Instance table1_instance() {
  const std::vector<double> field1_row{1000, 1000, 10, 10, 100, 100, 1, 1};
  const std::vector<double> field2_row{100, 100, 1, 1, 1000, 1000, 10, 10};
  std::vector<std::vector<double>> rows;
  std::vector<Journal> journals;
  for (int i = 1; i <= 8; ++i) {
    rows.push_back(i <= 4 ? field1_row : field2_row);
    journals.push_back({std::to_string(i), fmt::format("Journal {}", i), 100.0, 100.0});
  }
  return validate(JournalSet(std::move(journals)), CitationMatrix::from_rows(rows));
}

FieldPartition table1_partition() { return FieldPartition({1, 1, 1, 1, 2, 2, 2, 2}); }

Fixture counterexample_instance() {
  std::vector<Journal> journals{{"1", "Field 1 journal", 100.0, 100.0},
                                {"2", "Field 2 journal", 100.0, 100.0}};
  auto instance =
      validate(JournalSet(std::move(journals)), CitationMatrix::from_rows({{999, 1}, {3, 997}}));
  return {std::move(instance), FieldPartition({1, 2})};
}

void BlockModelSpec::check() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidParameter, msg); };
  if (journals_per_field < 1) fail("journals_per_field must be at least 1");
  if (!(cross_mean >= 0.0) || !(within_mean > cross_mean)) {
    fail(fmt::format("need within_mean > cross_mean >= 0, got {} and {}", within_mean,
                     cross_mean));
  }
  if (articles_min < 1 || articles_max < articles_min) {
    fail(fmt::format("invalid article range [{}, {}]", articles_min, articles_max));
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) fail(fmt::format("eta must be positive, got {}", eta));
  if (max_attempts < 1) fail("max_attempts must be at least 1");
}

Fixture block_model(const BlockModelSpec& spec) {
  spec.check();
  const std::size_t half = spec.journals_per_field;
  const std::size_t n = 2 * half;
  FixtureRng rng(spec.seed);

  std::vector<double> articles(n);
  for (std::size_t i = 0; i < half; ++i) {
    articles[i] = static_cast<double>(rng.integer(spec.articles_min, spec.articles_max));
  }
  if (spec.balanced) {
    std::vector<double> copy(articles.begin(), articles.begin() + static_cast<long>(half));
    rng.shuffle(copy);
    std::copy(copy.begin(), copy.end(), articles.begin() + static_cast<long>(half));
  } else {
    for (std::size_t i = half; i < n; ++i) {
      articles[i] = static_cast<double>(rng.integer(spec.articles_min, spec.articles_max));
    }
  }

  std::vector<int> field_of(n);
  std::vector<Journal> journals(n);
  const int width = static_cast<int>(std::to_string(n).size());
  for (std::size_t i = 0; i < n; ++i) {
    field_of[i] = i < half ? 1 : 2;
    journals[i] = {fmt::format("J{:0{}}", i + 1, width), "", articles[i], spec.eta * articles[i]};
  }

  const double midpoint = 0.5 * static_cast<double>(spec.articles_min + spec.articles_max);
  std::vector<double> means(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double m = field_of[i] == field_of[j] ? spec.within_mean : spec.cross_mean;
      if (spec.size_scaled) m *= articles[i] * articles[j] / (midpoint * midpoint);
      if (m > 700.0) {
        throw Error(ErrorKind::InvalidParameter,
                    fmt::format("pair mean {} too large for the Poisson sampler", m));
      }
      means[i * n + j] = m;
    }
  }

  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    std::vector<double> counts(n * n);
    for (std::size_t k = 0; k < n * n; ++k) counts[k] = static_cast<double>(rng.poisson(means[k]));
    if (spec.cross_mean == 0.0) {
      counts[0 * n + half] = std::max(counts[0 * n + half], 1.0);
      counts[half * n + 0] = std::max(counts[half * n + 0], 1.0);
    }
    CitationMatrix matrix(n, std::move(counts));
    if (!structure(matrix).irreducible) continue;
    return {validate(JournalSet(journals), std::move(matrix)), FieldPartition(field_of)};
  }
  throw Error(ErrorKind::GenerationFailed,
              fmt::format("no irreducible instance after {} attempts (seed {})",
                          spec.max_attempts, spec.seed));
}

}  // namespace jperf
