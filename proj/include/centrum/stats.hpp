#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centrum/centrality.hpp"
#include "centrum/corpus.hpp"

namespace centrum {

enum class Stars { none, one, two };
const char* stars_text(Stars s);  // "", "*", "**"
Stars stars_for(double p_value);  // two-tailed 0.05 / 0.01 convention

struct CorrelationResult {
  double rho = 0.0;
  int n = 0;
  double p_value = 1.0;
  Stars stars = Stars::none;
};

// Average (fractional) 1-based ranks; tied values share the mean of the
// rank positions they occupy.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman rank correlation: Pearson on average ranks, significance from
// the t-approximation with n - 2 degrees of freedom, two-tailed.
// Throws ValidationError on length mismatch or n < 3, and
// UndefinedCorrelationError when either input is constant.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

// Exact two-tailed permutation p-value for the observed |rho|: the share of
// the n! rank permutations with at least that |rho|. Only feasible for
// small samples; throws ValidationError when n > 12.
double spearman_exact_p(std::span<const double> x, std::span<const double> y);

enum class Target { new_authors, new_links, coauthors_next };
const char* target_name(Target t);
Target target_from_name(const std::string& name);

struct ReportOptions {
  int threads = 0;
  // Replace the t-approximation with the exact permutation p where n <= 12.
  bool exact_p = false;
};

// Correlation between each measure's values over the authors existing at
// year t and the chosen per-author quantity counted in t + 1. Degenerate
// cells (no authors, n < 3, constant side) are emitted with `undefined` set
// instead of a result.
struct CorrelationRow {
  Measure measure = Measure::degree;
  int year = 0;
  int n = 0;
  std::optional<CorrelationResult> result;
  std::string undefined_reason;  // empty when result is present
};

std::vector<CorrelationRow> correlation_report(const TemporalCorpus& corpus,
                                               std::span<const Measure> measures,
                                               Target target,
                                               const ReportOptions& options = {});

// Authors at year t split by the mean of a measure (low: value <= mean,
// high: value > mean); each group reports its mean number of new entrants
// attached in t + 1. An empty group leaves its mean unset and flags the row.
struct MeanSplitRow {
  Measure measure = Measure::degree;
  int year = 0;
  std::int64_t low_n = 0;
  std::int64_t high_n = 0;
  std::optional<double> low_mean;
  std::optional<double> high_mean;

  bool degenerate() const { return !low_mean.has_value() || !high_mean.has_value(); }
};

std::vector<MeanSplitRow> mean_split_report(const TemporalCorpus& corpus,
                                            std::span<const Measure> measures,
                                            const ReportOptions& options = {});

// CSV `measure,year,n,rho,p,stars`; degenerate rows carry "undefined" in the
// rho cell.
void write_correlation_csv(const std::vector<CorrelationRow>& rows, std::ostream& out);
// CSV `measure,year,low_n,low_mean,high_n,high_mean`; an empty group prints
// "undefined" for its mean.
void write_mean_split_csv(const std::vector<MeanSplitRow>& rows, std::ostream& out);

}  // namespace centrum
