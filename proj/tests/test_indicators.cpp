#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "oracle.hpp"
#include "jperf/indicators.hpp"
#include "jperf/properties.hpp"
#include "jperf/synth.hpp"

using namespace jperf;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

void check_relative(const std::vector<double>& got, const std::vector<double>& want, double rel) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(got[i] - want[i]) <= rel * std::abs(want[i]));
  }
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

Fixture random_fixture(std::uint64_t seed, std::size_t per_field = 5) {
  BlockModelSpec spec;
  spec.journals_per_field = per_field;
  spec.within_mean = 10;
  spec.cross_mean = 1;
  spec.articles_min = 20;
  spec.articles_max = 250;
  spec.seed = seed;
  return block_model(spec);
}

}  // namespace

// Independent numpy eigen-solve of the 8-journal example, frozen.
constexpr double kIppTotalScenario2[] = {38.58915829092281,  38.58915829092284,
                                         0.38589158290922837, 0.38589158290922837,
                                         38.43278619519198,  38.43278619519197,
                                         0.3843278619519207};
constexpr double kIppMeanScenario2[] = {5.512736898703258,   5.512736898703263,
                                        0.05512736898703263, 0.05512736898703263,
                                        5.490398027884569,   5.490398027884567,
                                        0.05490398027884582};
constexpr double kAfScenario2[] = {42.937508163718924,  42.937508163718924, 0.42937508163718924,
                                   0.42937508163718924, 34.06280274093919,  34.06280274093919,
                                   0.34062802740939185};

TEST_CASE("impact factor") {
  const auto inst = table1_instance();
  const auto v = impact_factor(inst);
  CHECK(v.kind == IndicatorKind::IF);
  CHECK(v.basis == Basis::per_article);
  CHECK(v[0] == 44.0);  // column 1: 4 * 1000 + 4 * 100 = 4400 over 100 articles

  const auto lone = testing::make_instance({{0}}, {5});
  CHECK(impact_factor(lone)[0] == 0.0);

  const auto doubled = validate(inst.journals(), inst.matrix().scaled(2.0));
  const auto v2 = impact_factor(doubled);
  for (std::size_t i = 0; i < 8; ++i) CHECK(v2[i] == 2 * v[i]);

  const auto zero = testing::make_instance({{1, 1}, {1, 1}}, {0, 10}, {10, 10});
  try {
    impact_factor(zero);
    FAIL("expected ZeroArticles");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroArticles);
    CHECK(e.journal() == 0u);
  }
}

TEST_CASE("audience factor reproduces both coverage scenarios") {
  const auto inst = table1_instance();
  check_close(audience_factor(inst).values, {44, 44, 0.44, 0.44, 44, 44, 0.44, 0.44}, 1e-12);
  const auto reduced = drop_journal(inst, 7);
  check_relative(audience_factor(reduced).values,
                 std::vector<double>(std::begin(kAfScenario2), std::end(kAfScenario2)), 1e-13);
}

TEST_CASE("audience factor equals impact factor when reference densities agree") {
  // every journal has s_j / a_j2 = 2
  const auto inst = testing::make_instance({{10, 6, 4}, {2, 2, 16}, {30, 0, 10}}, {5, 7, 11},
                                           {10, 10, 20});
  const auto af = audience_factor(inst);
  const auto impact = impact_factor(inst);
  for (std::size_t i = 0; i < 3; ++i) CHECK(af[i] == doctest::Approx(impact[i]).epsilon(1e-14));
}

TEST_CASE("audience factor error paths") {
  const auto dangling = testing::make_instance({{1, 1}, {0, 0}});
  CHECK_THROWS_WITH_AS(audience_factor(dangling), doctest::Contains("no citations"), Error);
  const auto no_t2 = testing::make_instance({{1, 1}, {1, 1}}, {10, 10}, {10, 0});
  try {
    audience_factor(no_t2);
    FAIL("expected ZeroArticlesT2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroArticlesT2);
    CHECK(e.journal() == 1u);
  }
}

TEST_CASE("influence weights on the counterexample") {
  const auto fx = counterexample_instance();
  const auto iw = influence_weights(fx.instance);
  CHECK(iw.basis == Basis::per_reference);
  check_close(iw.values, {1.5, 0.5}, 1e-12);
  const auto ipp = influence_per_publication(fx.instance);
  check_close(ipp.values, {15, 5}, 1e-11);
}

TEST_CASE("influence weights are uniform on a doubly balanced matrix") {
  // column sums equal row sums
  const auto inst = testing::make_instance({{5, 3, 2}, {1, 6, 3}, {4, 1, 5}});
  const auto iw = influence_weights(inst);
  check_close(iw.values, {1, 1, 1}, 1e-12);
}

TEST_CASE("influence weights satisfy the balance equations and the normalization") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto fx = random_fixture(seed);
    const auto& m = fx.instance.matrix();
    const auto iw = influence_weights(fx.instance);
    double weighted = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      double inflow = 0;
      for (std::size_t j = 0; j < m.size(); ++j) inflow += iw[j] * m(j, i);
      CHECK(iw[i] == doctest::Approx(inflow / m.row_sum(i)).epsilon(1e-11));
      weighted += iw[i] * m.row_sum(i);
    }
    CHECK(std::abs(weighted / m.total() - 1.0) < 1e-12);
    const auto mean = influence_weights(fx.instance, IwNormalization::mean_references);
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(mean[i] * static_cast<double>(m.size()) == doctest::Approx(iw[i]).epsilon(1e-13));
    }
  }
}

TEST_CASE("influence per publication on the 8-journal example") {
  const auto inst = table1_instance();
  const auto reduced = drop_journal(inst, 7);
  SUBCASE("mean-reference scale") {
    const auto n = IwNormalization::mean_references;
    check_close(influence_per_publication(inst, n).values,
                {5.5, 5.5, 0.055, 0.055, 5.5, 5.5, 0.055, 0.055}, 1e-12);
    check_relative(influence_per_publication(reduced, n).values,
                   std::vector<double>(std::begin(kIppMeanScenario2), std::end(kIppMeanScenario2)),
                   1e-12);
  }
  SUBCASE("total-reference scale") {
    check_close(influence_per_publication(inst).values,
                {44, 44, 0.44, 0.44, 44, 44, 0.44, 0.44}, 1e-11);
    check_relative(influence_per_publication(reduced).values,
                   std::vector<double>(std::begin(kIppTotalScenario2), std::end(kIppTotalScenario2)),
                   1e-12);
  }
}

TEST_CASE("influence weights need an irreducible matrix") {
  const auto inst = testing::make_instance({{5, 0}, {0, 5}});
  CHECK_THROWS_AS(influence_weights(inst), NotIrreducibleError);
}

TEST_CASE("eigenfactor at alpha = 0 uses article shares") {
  const auto fx = random_fixture(4);
  const auto detail = eigenfactor_detail(fx.instance, EigenParams(0.0));
  const auto a = fx.instance.journals().articles_t1();
  const double total = sum(a);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(detail.visit_probabilities[i] == a[i] / total);
  const auto& m = fx.instance.matrix();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ef = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      ef += 100.0 * detail.visit_probabilities[j] * m(j, i) / m.row_sum(j);
    }
    CHECK(detail.scores[i] == doctest::Approx(ef).epsilon(1e-13));
  }
}

TEST_CASE("eigenfactor scores add up to 100") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto fx = random_fixture(seed);
    for (double alpha : {0.0, 0.25, 0.5, 0.85, 1.0}) {
      const auto d = eigenfactor_detail(fx.instance, EigenParams(alpha));
      CHECK(std::abs(sum(d.scores.values) - 100.0) < 1e-9);
      CHECK(std::abs(sum(d.visit_probabilities) - 1.0) < 1e-12);
      CHECK(d.scores.basis == Basis::total);
    }
  }
}

TEST_CASE("article influence matches the oracle") {
  for (std::uint64_t seed = 11; seed <= 20; ++seed) {
    const auto fx = random_fixture(seed, 3 + seed % 4);
    const auto rows = oracle::rows_of(fx.instance.matrix());
    const auto a = fx.instance.journals().articles_t1();
    for (double alpha : {0.0, 0.5, 0.85, 1.0}) {
      check_relative(article_influence(fx.instance, EigenParams(alpha)).values,
                     oracle::article_influence(rows, a, alpha), 1e-11);
    }
  }
}

TEST_CASE("article influence endpoints on the 8-journal example") {
  const auto inst = table1_instance();
  const auto ai1 = article_influence(inst, EigenParams(1.0));
  const auto ipp = influence_per_publication(inst, IwNormalization::mean_references);
  CHECK(proportionality(ipp.values, ai1.values).spread < 1e-12);
  const auto ai0 = article_influence(inst, EigenParams(0.0));
  CHECK(proportionality(audience_factor(inst).values, ai0.values).spread < 1e-12);
}

TEST_CASE("article influence halves when a journal doubles its output") {
  const auto inst = testing::make_instance({{5, 2, 1}, {1, 6, 2}, {3, 1, 4}}, {10, 20, 30});
  const auto bigger = testing::make_instance({{5, 2, 1}, {1, 6, 2}, {3, 1, 4}}, {20, 20, 30});
  // at alpha = 1 the visit probabilities ignore article counts
  const auto a = article_influence(inst, EigenParams(1.0));
  const auto b = article_influence(bigger, EigenParams(1.0));
  CHECK(b[0] == doctest::Approx(a[0] / 2).epsilon(1e-13));
  CHECK(b[1] == doctest::Approx(a[1]).epsilon(1e-13));
}

TEST_CASE("eigenfactor at alpha = 1 needs irreducibility, below 1 it does not") {
  const auto inst = testing::make_instance({{5, 1}, {0, 5}});
  CHECK_THROWS_AS(eigenfactor(inst, EigenParams(1.0)), NotIrreducibleError);
  CHECK(sum(eigenfactor(inst, EigenParams(0.85)).values) == doctest::Approx(100.0));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(EigenParams(-0.1), Error);
  CHECK_THROWS_AS(EigenParams(1.01), Error);
  CHECK_THROWS_AS(PageRankParams(0.7, 0.4), Error);
  CHECK_THROWS_AS(PageRankParams(-0.1, 0.4), Error);
  CHECK_NOTHROW(PageRankParams(0.9, 0.0999));
  CHECK(EigenParams().alpha() == 0.85);
}

TEST_CASE("weighted pagerank closed forms") {
  const auto fx = random_fixture(9);
  const auto n = fx.instance.size();
  const auto uniform = weighted_pagerank(fx.instance, PageRankParams(0, 0));
  for (double r : uniform.values) CHECK(r == doctest::Approx(1.0 / n).epsilon(1e-15));
  const auto shares = weighted_pagerank(fx.instance, PageRankParams(0, 1));
  const auto a = fx.instance.journals().articles_t1();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(shares[i] == doctest::Approx(a[i] / sum(a)).epsilon(1e-14));
  }
}

TEST_CASE("weighted pagerank sums to one and matches a dense solve") {
  for (std::uint64_t seed = 21; seed <= 30; ++seed) {
    const auto fx = random_fixture(seed);
    const auto rows = oracle::rows_of(fx.instance.matrix());
    const auto a = fx.instance.journals().articles_t1();
    const std::size_t n = a.size();
    for (auto [beta, gamma] : {std::pair{0.85, 0.0}, {0.9, 0.0999}, {0.5, 0.5}, {0.3, 0.2}}) {
      const auto r = weighted_pagerank(fx.instance, PageRankParams(beta, gamma));
      CHECK(std::abs(sum(r.values) - 1.0) < 1e-12);
      // oracle: teleport folded back into a probability vector
      std::vector<double> t(n);
      for (std::size_t i = 0; i < n; ++i) {
        t[i] = (gamma * a[i] / sum(a) + (1 - beta - gamma) / n) / (1 - beta);
      }
      check_relative(r.values, oracle::stationary(rows, beta, t), 1e-11);
    }
  }
}

TEST_CASE("weighted pagerank at beta = 1 reduces to influence per publication") {
  const auto inst = table1_instance();
  const auto r = weighted_pagerank(inst, PageRankParams(1, 0));
  std::vector<double> per_article(r.values);
  for (std::size_t i = 0; i < 8; ++i) per_article[i] /= inst.journals()[i].articles_t1;
  CHECK(proportionality(influence_per_publication(inst).values, per_article).spread < 1e-9);
}

TEST_CASE("scimago journal rank") {
  const auto inst = table1_instance();
  SUBCASE("beta = 0, gamma = 1 gives one value for everybody") {
    const auto fx = random_fixture(12);
    const auto s = scimago_jr(fx.instance, PageRankParams(0, 1));
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    CHECK(*hi - *lo < 1e-12);
  }
  SUBCASE("beta = 1 on the counterexample is proportional to (15, 5)") {
    const auto fx = counterexample_instance();
    const auto s = scimago_jr(fx.instance, PageRankParams(1, 0));
    CHECK(s[0] / s[1] == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("default parameters match a dense solve") {
    const auto s = scimago_jr(inst);
    CHECK(s.params.beta == 0.9);
    CHECK(s.params.gamma == 0.0999);
    const std::size_t n = 8;
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = (0.0999 * 0.125 + 0.0001 / n) / 0.1;
    const auto r = oracle::stationary(oracle::rows_of(inst.matrix()), 0.9, t);
    double weighted = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s[i] > 0);
      CHECK(s[i] == doctest::Approx(r[i] / 100).epsilon(1e-12));
      weighted += s[i] * inst.journals()[i].articles_t1;
    }
    CHECK(weighted == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("scaling the citation matrix") {
  const auto fx = random_fixture(31);
  const auto& inst = fx.instance;
  const double k = 3.5;
  const auto scaled = validate(inst.journals(), inst.matrix().scaled(k));
  for (auto kind : {IndicatorKind::IW, IndicatorKind::EF, IndicatorKind::AI, IndicatorKind::WPR,
                    IndicatorKind::SJR}) {
    CAPTURE(to_string(kind));
    check_relative(compute_indicator(scaled, kind).values, compute_indicator(inst, kind).values,
                   1e-11);
  }
  // citations per article: these grow with the counts
  for (auto kind : {IndicatorKind::IF, IndicatorKind::AF, IndicatorKind::IPP}) {
    CAPTURE(to_string(kind));
    auto expected = compute_indicator(inst, kind).values;
    for (auto& v : expected) v *= k;
    check_relative(compute_indicator(scaled, kind).values, expected, 1e-11);
  }
}

TEST_CASE("permutation equivariance") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 40; seed < 45; ++seed) {
    const auto fx = random_fixture(seed);
    const auto& inst = fx.instance;
    const std::size_t n = inst.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Journal> js;
    std::vector<double> counts;
    for (std::size_t i = 0; i < n; ++i) {
      js.push_back(inst.journals()[perm[i]]);
      for (std::size_t j = 0; j < n; ++j) counts.push_back(inst.matrix()(perm[i], perm[j]));
    }
    const auto permuted = validate(JournalSet(js), CitationMatrix(n, counts));
    for (auto kind : {IndicatorKind::IF, IndicatorKind::AF, IndicatorKind::IW, IndicatorKind::IPP,
                      IndicatorKind::EF, IndicatorKind::AI, IndicatorKind::WPR,
                      IndicatorKind::SJR}) {
      const auto base = compute_indicator(inst, kind);
      const auto moved = compute_indicator(permuted, kind);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(moved[i] == doctest::Approx(base[perm[i]]).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("labels and parsing") {
  CHECK(parse_indicator_kind("IPP") == IndicatorKind::IPP);
  CHECK(parse_indicator_kind("sjr") == IndicatorKind::SJR);
  CHECK_FALSE(parse_indicator_kind("h-index"));
  const auto inst = table1_instance();
  CHECK(article_influence(inst, EigenParams(0.5)).label() == "AI(0.5)");
  CHECK(scimago_jr(inst).label() == "SJR(0.9,0.0999)");
  CHECK(basis_of(IndicatorKind::IW) == Basis::per_reference);
  CHECK(basis_of(IndicatorKind::WPR) == Basis::total);
}
