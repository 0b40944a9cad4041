#include "centrum/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <boost/math/distributions/students_t.hpp>

#include "centrum/errors.hpp"
#include "centrum/evolution.hpp"
#include "centrum/format.hpp"

namespace centrum {

const char* stars_text(Stars s) {
  switch (s) {
    case Stars::none: return "";
    case Stars::one: return "*";
    case Stars::two: return "**";
  }
  return "";
}

Stars stars_for(double p_value) {
  if (p_value < 0.01) return Stars::two;
  if (p_value < 0.05) return Stars::one;
  return Stars::none;
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[idx[j]] == values[idx[i]]) ++j;
    // Positions i..j-1 hold the same value; all get the mean rank.
    const double rank = 0.5 * static_cast<double>(i + j - 1) + 1.0;
    for (std::size_t k = i; k < j; ++k) ranks[idx[k]] = rank;
    i = j;
  }
  return ranks;
}

namespace {

bool is_constant(std::span<const double> v) {
  for (double x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

double pearson_on(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

void check_sample(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ValidationError("spearman: length mismatch (" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) {
    throw ValidationError("spearman: need at least 3 samples, got " +
                          std::to_string(x.size()));
  }
  if (is_constant(x)) {
    throw UndefinedCorrelationError("spearman: x is constant, correlation undefined");
  }
  if (is_constant(y)) {
    throw UndefinedCorrelationError("spearman: y is constant, correlation undefined");
  }
}

double two_tailed_p(double rho, int n) {
  if (std::abs(rho) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = rho * std::sqrt(df / ((1.0 - rho) * (1.0 + rho)));
  boost::math::students_t_distribution<double> dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
  check_sample(x, y);
  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  double rho = pearson_on(rx, ry);
  rho = std::clamp(rho, -1.0, 1.0);

  CorrelationResult result;
  result.rho = rho;
  result.n = static_cast<int>(x.size());
  result.p_value = two_tailed_p(rho, result.n);
  result.stars = stars_for(result.p_value);
  return result;
}

double spearman_exact_p(std::span<const double> x, std::span<const double> y) {
  check_sample(x, y);
  const std::size_t n = x.size();
  if (n > 12) {
    throw ValidationError("exact permutation p-value limited to n <= 12, got " +
                          std::to_string(n));
  }
  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);

  // With the rank multisets fixed, |rho| is monotone in |sum(rx * ry)
  // - n*mean(rx)*mean(ry)|, so permutations can be compared on that sum.
  double mean_x = std::accumulate(rx.begin(), rx.end(), 0.0) / static_cast<double>(n);
  double mean_y = std::accumulate(ry.begin(), ry.end(), 0.0) / static_cast<double>(n);
  const double center = static_cast<double>(n) * mean_x * mean_y;

  double observed = 0.0;
  for (std::size_t i = 0; i < n; ++i) observed += rx[i] * ry[i];
  const double observed_dev = std::abs(observed - center);

  std::vector<double> perm = ry;
  std::sort(perm.begin(), perm.end());
  std::uint64_t at_least = 0;
  std::uint64_t total = 0;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += rx[i] * perm[i];
    if (std::abs(s - center) >= observed_dev - 1e-12) ++at_least;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // next_permutation over a multiset enumerates each distinct arrangement
  // once; the ratio is unchanged versus enumerating all n! with repeats.
  return static_cast<double>(at_least) / static_cast<double>(total);
}

const char* target_name(Target t) {
  switch (t) {
    case Target::new_authors: return "new-authors";
    case Target::new_links: return "new-links";
    case Target::coauthors_next: return "coauthors";
  }
  return "?";
}

Target target_from_name(const std::string& name) {
  if (name == "new-authors") return Target::new_authors;
  if (name == "new-links") return Target::new_links;
  if (name == "coauthors") return Target::coauthors_next;
  throw ValidationError("unknown correlation target '" + name + "'");
}

namespace {

std::vector<double> measure_values_for(const Snapshot& snapshot, Measure measure,
                                       int threads) {
  switch (measure) {
    case Measure::degree: return degree_values(snapshot.adjacency());
    case Measure::closeness: return closeness_values(snapshot.adjacency(), threads);
    case Measure::betweenness: return betweenness_values(snapshot.adjacency(), threads);
  }
  return {};
}

std::vector<double> target_values_for(const Snapshot& base,
                                      const std::map<AuthorId, AttachmentCounts>& att,
                                      Target target) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(base.node_count()));
  for (const AuthorId& author : base.nodes()) {
    const AttachmentCounts& c = att.at(author);
    switch (target) {
      case Target::new_authors: values.push_back(c.new_author_count); break;
      case Target::new_links: values.push_back(c.new_link_count); break;
      case Target::coauthors_next: values.push_back(c.next_year_coauthor_count); break;
    }
  }
  return values;
}

}  // namespace

std::vector<CorrelationRow> correlation_report(const TemporalCorpus& corpus,
                                               std::span<const Measure> measures,
                                               Target target,
                                               const ReportOptions& options) {
  if (corpus.empty() || corpus.min_year() == corpus.max_year()) {
    throw ValidationError("correlation report needs a corpus spanning >= 2 years");
  }
  SnapshotSeries series(corpus);
  std::vector<CorrelationRow> rows;

  for (Measure measure : measures) {
    for (int year = series.min_year(); year < series.max_year(); ++year) {
      const Snapshot& base = series.at(year);
      CorrelationRow row;
      row.measure = measure;
      row.year = year;
      row.n = base.node_count();
      if (base.node_count() == 0) {
        row.undefined_reason = "no existing authors";
        rows.push_back(std::move(row));
        continue;
      }
      std::vector<double> x = measure_values_for(base, measure, options.threads);
      std::vector<double> y =
          target_values_for(base, attachments_per_author(series, year), target);
      try {
        CorrelationResult r = spearman(x, y);
        if (options.exact_p && row.n <= 12) {
          r.p_value = spearman_exact_p(x, y);
          r.stars = stars_for(r.p_value);
        }
        row.result = r;
      } catch (const Error& e) {
        row.undefined_reason = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<MeanSplitRow> mean_split_report(const TemporalCorpus& corpus,
                                            std::span<const Measure> measures,
                                            const ReportOptions& options) {
  if (corpus.empty() || corpus.min_year() == corpus.max_year()) {
    throw ValidationError("mean-split report needs a corpus spanning >= 2 years");
  }
  SnapshotSeries series(corpus);
  std::vector<MeanSplitRow> rows;

  for (Measure measure : measures) {
    for (int year = series.min_year(); year < series.max_year(); ++year) {
      const Snapshot& base = series.at(year);
      MeanSplitRow row;
      row.measure = measure;
      row.year = year;
      if (base.node_count() == 0) {
        rows.push_back(row);
        continue;
      }
      std::vector<double> values = measure_values_for(base, measure, options.threads);
      std::vector<double> attachments =
          target_values_for(base, attachments_per_author(series, year),
                            Target::new_authors);
      const double mean =
          std::accumulate(values.begin(), values.end(), 0.0) /
          static_cast<double>(values.size());
      double low_sum = 0.0, high_sum = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] > mean) {
          ++row.high_n;
          high_sum += attachments[i];
        } else {
          ++row.low_n;
          low_sum += attachments[i];
        }
      }
      if (row.low_n > 0) row.low_mean = low_sum / static_cast<double>(row.low_n);
      if (row.high_n > 0) row.high_mean = high_sum / static_cast<double>(row.high_n);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_correlation_csv(const std::vector<CorrelationRow>& rows, std::ostream& out) {
  out << "measure,year,n,rho,p,stars\n";
  for (const CorrelationRow& row : rows) {
    out << measure_name(row.measure) << ',' << row.year << ',' << row.n << ',';
    if (row.result) {
      out << format_f4(row.result->rho) << ',' << format_f4(row.result->p_value) << ','
          << stars_text(row.result->stars);
    } else {
      out << "undefined,,";
    }
    out << '\n';
  }
}

void write_mean_split_csv(const std::vector<MeanSplitRow>& rows, std::ostream& out) {
  out << "measure,year,low_n,low_mean,high_n,high_mean\n";
  for (const MeanSplitRow& row : rows) {
    out << measure_name(row.measure) << ',' << row.year << ',' << row.low_n << ',';
    out << (row.low_mean ? format_f4(*row.low_mean) : std::string("undefined"));
    out << ',' << row.high_n << ',';
    out << (row.high_mean ? format_f4(*row.high_mean) : std::string("undefined"));
    out << '\n';
  }
}

}  // namespace centrum
