#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "centrum/errors.hpp"
#include "centrum/evolution.hpp"
#include "centrum/fixture.hpp"
#include "centrum/stats.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace centrum;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, bool ties) {
  std::vector<double> v(n);
  for (double& x : v) {
    std::uint64_t raw = rng();
    x = ties ? static_cast<double>(raw % 6) : static_cast<double>(raw >> 11) * 0x1.0p-53;
  }
  return v;
}

}  // namespace

TEST_CASE("monotone data gives rho of exactly +-1") {
  std::vector<double> x = {1, 2, 3};
  CHECK(spearman(x, std::vector<double>{2, 4, 6}).rho == 1.0);
  CHECK(spearman(x, std::vector<double>{3, 2, 1}).rho == -1.0);
  CHECK(spearman(x, std::vector<double>{2, 4, 6}).p_value == 0.0);
}

TEST_CASE("the tie case matches the hand computation") {
  std::vector<double> x = {1, 2, 2, 3};
  std::vector<double> y = {1, 3, 2, 4};
  CorrelationResult r = spearman(x, y);
  CHECK(r.rho == doctest::Approx(4.5 / std::sqrt(22.5)).epsilon(1e-12));
  CHECK(r.rho == doctest::Approx(0.9487).epsilon(1e-4));
  CHECK(r.n == 4);
}

TEST_CASE("average ranks give tied values the mean position") {
  std::vector<double> v = {10, 20, 20, 30};
  CHECK(average_ranks(v) == std::vector<double>{1.0, 2.5, 2.5, 4.0});
  std::vector<double> all_tied = {5, 5, 5};
  CHECK(average_ranks(all_tied) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("average ranks agree with the counting oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto v = random_vector(rng, 3 + rng() % 20, trial % 2 == 0);
    auto expected = oracle::counting_ranks(v);
    auto got = average_ranks(v);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("degenerate samples are rejected explicitly") {
  std::vector<double> x = {1, 2, 3};
  CHECK_THROWS_AS(spearman(x, std::vector<double>{1, 2}), ValidationError);
  CHECK_THROWS_AS(spearman(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
                  ValidationError);
  CHECK_THROWS_AS(spearman(x, std::vector<double>{7, 7, 7}), UndefinedCorrelationError);
  CHECK_THROWS_AS(spearman(std::vector<double>{7, 7, 7}, x), UndefinedCorrelationError);
}

TEST_CASE("spearman is symmetric and self-correlation is 1") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_vector(rng, 10, trial % 2 == 0);
    auto y = random_vector(rng, 10, trial % 2 == 1);
    if (std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end() ||
        std::adjacent_find(y.begin(), y.end(), std::not_equal_to<>()) == y.end()) {
      continue;
    }
    CHECK(spearman(x, y).rho == doctest::Approx(spearman(y, x).rho).epsilon(1e-15));
    CHECK(spearman(x, x).rho == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("rho is invariant under strictly increasing transforms") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_vector(rng, 12, false);
    auto y = random_vector(rng, 12, false);
    for (double& v : x) v += 0.5;  // keep positive for the cube
    double base = spearman(x, y).rho;

    auto affine = x;
    for (double& v : affine) v = 2.0 * v + 7.0;
    CHECK(std::abs(spearman(affine, y).rho - base) < 1e-12);

    auto cubed = x;
    for (double& v : cubed) v = v * v * v;
    CHECK(std::abs(spearman(cubed, y).rho - base) < 1e-12);
  }
}

TEST_CASE("spearman agrees with the Pearson-on-ranks oracle under ties") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_vector(rng, 4 + rng() % 12, true);
    auto y = random_vector(rng, x.size(), true);
    bool x_const = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
    bool y_const = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (x_const || y_const) continue;
    CHECK(std::abs(spearman(x, y).rho - oracle::spearman_rho(x, y)) < 1e-12);
  }
}

TEST_CASE("p-values shrink as agreement grows at fixed n") {
  // same n, increasingly monotone y
  std::vector<double> x = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<double> weak = {2, 1, 4, 3, 6, 5, 8, 7};
  std::vector<double> strong = {1, 2, 3, 4, 5, 6, 8, 7};
  CorrelationResult rw = spearman(x, weak);
  CorrelationResult rs = spearman(x, strong);
  CHECK(std::abs(rs.rho) > std::abs(rw.rho));
  CHECK(rs.p_value < rw.p_value);
}

TEST_CASE("stars follow the two-tailed conventions") {
  CHECK(stars_for(0.2) == Stars::none);
  CHECK(stars_for(0.049) == Stars::one);
  CHECK(stars_for(0.011) == Stars::one);
  CHECK(stars_for(0.009) == Stars::two);
  CHECK(std::string(stars_text(Stars::none)).empty());
  CHECK(std::string(stars_text(Stars::one)) == "*");
  CHECK(std::string(stars_text(Stars::two)) == "**");
}

TEST_CASE("exact permutation p-value on a hand-enumerable case") {
  std::vector<double> x = {1, 2, 3};
  std::vector<double> y = {1, 2, 3};
  // 6 permutations; |rho| = 1 only for the identity and the reversal
  CHECK(spearman_exact_p(x, y) == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("exact permutation p-value matches brute-force recomputation") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = random_vector(rng, 6, true);
    auto y = random_vector(rng, 6, true);
    bool x_const = std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
    bool y_const = std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; });
    if (x_const || y_const) continue;

    double observed = std::abs(oracle::spearman_rho(x, y));
    auto perm = y;
    std::sort(perm.begin(), perm.end());
    int hits = 0;
    int total = 0;
    do {
      if (std::abs(oracle::spearman_rho(x, perm)) >= observed - 1e-9) ++hits;
      ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));

    CHECK(spearman_exact_p(x, y) ==
          doctest::Approx(static_cast<double>(hits) / total).epsilon(1e-12));
  }
}

TEST_CASE("exact permutation p-value refuses large samples") {
  std::vector<double> big(13);
  std::iota(big.begin(), big.end(), 0.0);
  CHECK_THROWS_AS(spearman_exact_p(big, big), ValidationError);
}

TEST_CASE("correlation report needs two years") {
  auto one_year = helpers::corpus({helpers::pub("p1", 2001, {"A", "B"})});
  CHECK_THROWS_AS(
      correlation_report(one_year, kAllMeasures, Target::new_authors),
      ValidationError);
}

TEST_CASE("degree correlates positively when hubs receive the entrants") {
  // year 1: star around H plus an isolated pair; year 2: H gains 3 entrants
  auto corpus = helpers::corpus({
      helpers::pub("p1", 2001, {"H", "a"}),
      helpers::pub("p2", 2001, {"H", "b"}),
      helpers::pub("p3", 2001, {"c", "d"}),
      helpers::pub("p4", 2002, {"H", "n1", "n2", "n3"}),
  });
  auto rows = correlation_report(corpus, std::vector<Measure>{Measure::degree},
                                 Target::new_authors);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].result.has_value());
  CHECK(rows[0].year == 2001);
  CHECK(rows[0].n == 5);
  CHECK(rows[0].result->rho > 0.0);

  // sign verified against the spearman op on the hand-built vectors:
  // degrees (H,a,b,c,d) = (2,1,1,1,1); new entrants = (3,0,0,0,0)
  std::vector<double> x = {2, 1, 1, 1, 1};
  std::vector<double> y = {3, 0, 0, 0, 0};
  CHECK(rows[0].result->rho == doctest::Approx(spearman(x, y).rho).epsilon(1e-12));
}

TEST_CASE("a frozen next year makes degree and coauthor count identical") {
  auto corpus = helpers::corpus({
      helpers::pub("p1", 2001, {"A", "B"}),
      helpers::pub("p2", 2001, {"B", "C"}),
      helpers::pub("p3", 2001, {"C", "D"}),
      helpers::pub("p4", 2002, {"A", "B"}),  // repeat only, degrees frozen
  });
  auto rows = correlation_report(corpus, std::vector<Measure>{Measure::degree},
                                 Target::coauthors_next);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].result.has_value());
  CHECK(rows[0].result->rho == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate report cells carry an undefined marker") {
  // constant target: nobody attaches anything in 2002
  auto corpus = helpers::corpus({
      helpers::pub("p1", 2001, {"A", "B"}),
      helpers::pub("p2", 2001, {"C", "D"}),
      helpers::pub("p3", 2002, {"E", "F"}),
  });
  auto rows = correlation_report(corpus, std::vector<Measure>{Measure::degree},
                                 Target::new_authors);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].result.has_value());
  CHECK_FALSE(rows[0].undefined_reason.empty());

  std::ostringstream out;
  write_correlation_csv(rows, out);
  CHECK(out.str() ==
        "measure,year,n,rho,p,stars\n"
        "degree,2001,4,undefined,,\n");
}

TEST_CASE("correlation report covers measures x years on the fixture") {
  Fixture fx = make_fixture();
  auto rows = correlation_report(fx.corpus, kAllMeasures, Target::new_authors);
  CHECK(rows.size() == 3 * 9);  // 3 measures, years 2000..2008
  for (const CorrelationRow& row : rows) {
    CHECK(row.year >= 2000);
    CHECK(row.year <= 2008);
    if (row.result) {
      CHECK(std::abs(row.result->rho) <= 1.0);
      CHECK(row.result->p_value >= 0.0);
      CHECK(row.result->p_value <= 1.0);
      CHECK(row.result->stars == stars_for(row.result->p_value));
    }
  }
}

TEST_CASE("exact p option replaces the approximation on small samples") {
  auto corpus = helpers::corpus({
      helpers::pub("p1", 2001, {"H", "a"}),
      helpers::pub("p2", 2001, {"H", "b"}),
      helpers::pub("p3", 2002, {"H", "n1"}),
  });
  ReportOptions exact;
  exact.exact_p = true;
  auto rows = correlation_report(corpus, std::vector<Measure>{Measure::degree},
                                 Target::new_authors, exact);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].result.has_value());

  std::vector<double> x = {2, 1, 1};  // degrees H, a, b
  std::vector<double> y = {1, 0, 0};  // entrants attached
  CHECK(rows[0].result->p_value ==
        doctest::Approx(spearman_exact_p(x, y)).epsilon(1e-15));
}

TEST_CASE("mean split separates hubs from the rest") {
  // degrees after 2001: H=2, a=1, b=1 -> mean 4/3; high {H}, low {a,b}
  auto corpus = helpers::corpus({
      helpers::pub("p1", 2001, {"H", "a"}),
      helpers::pub("p2", 2001, {"H", "b"}),
      helpers::pub("p3", 2002, {"H", "n1", "n2"}),
  });
  auto rows = mean_split_report(corpus, std::vector<Measure>{Measure::degree});
  REQUIRE(rows.size() == 1);
  const MeanSplitRow& row = rows[0];
  CHECK(row.year == 2001);
  CHECK(row.low_n == 2);
  CHECK(row.high_n == 1);
  REQUIRE(row.low_mean.has_value());
  REQUIRE(row.high_mean.has_value());
  CHECK(*row.low_mean == doctest::Approx(0.0));
  CHECK(*row.high_mean == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(row.degenerate());
}

TEST_CASE("mean split groups partition the authors and combine to the mean") {
  Fixture fx = make_fixture();
  auto rows = mean_split_report(fx.corpus, kAllMeasures);
  SnapshotSeries series(fx.corpus);
  for (const MeanSplitRow& row : rows) {
    CHECK(row.low_n + row.high_n == series.at(row.year).node_count());
    if (row.low_mean && row.high_mean) {
      // weighted combination equals the overall attachment mean
      auto counts = attachments_per_author(series, row.year);
      double total = 0.0;
      for (const auto& [author, c] : counts) total += c.new_author_count;
      double overall = total / static_cast<double>(counts.size());
      double combined = (*row.low_mean * static_cast<double>(row.low_n) +
                         *row.high_mean * static_cast<double>(row.high_n)) /
                        static_cast<double>(row.low_n + row.high_n);
      CHECK(combined == doctest::Approx(overall).epsilon(1e-9));
    }
  }
}

TEST_CASE("an all-equal measure leaves the high group empty and flagged") {
  auto corpus = helpers::corpus({
      helpers::pub("p1", 2001, {"A", "B"}),
      helpers::pub("p2", 2002, {"A", "n1"}),
  });
  auto rows = mean_split_report(corpus, std::vector<Measure>{Measure::degree});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].low_n == 2);
  CHECK(rows[0].high_n == 0);
  CHECK(rows[0].degenerate());
  CHECK_FALSE(rows[0].high_mean.has_value());

  std::ostringstream out;
  write_mean_split_csv(rows, out);
  CHECK(out.str() ==
        "measure,year,low_n,low_mean,high_n,high_mean\n"
        "degree,2001,2,0.5000,0,undefined\n");
}

TEST_CASE("target names round-trip and reject junk") {
  for (Target t : {Target::new_authors, Target::new_links, Target::coauthors_next}) {
    CHECK(target_from_name(target_name(t)) == t);
  }
  CHECK_THROWS_AS(target_from_name("citations"), ValidationError);
}
