#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "centrum/corpus.hpp"

namespace centrum {

using NodeIndex = int;

struct Edge {
  NodeIndex a = 0;  // a < b
  NodeIndex b = 0;
  int weight = 0;

  bool operator==(const Edge&) const = default;
};

struct SnapshotBuilder;

// Cumulative simple weighted co-authorship graph through 31 Dec of `year`.
// Nodes exist only via co-authorship: single-authored publications add
// nothing. An edge weight counts joint publications of the pair, so a
// publication with k authors adds +1 to each of its k*(k-1)/2 pairs.
// Immutable once built; all analytics share snapshots across threads.
class Snapshot {
 public:
  int year() const { return year_; }
  int node_count() const { return static_cast<int>(names_.size()); }
  std::int64_t distinct_edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  // Total pair increments folded in; >= distinct_edge_count.
  std::int64_t weighted_link_sum() const { return weighted_link_sum_; }

  // Node order is first-touch order over publications sorted by (year, id).
  const std::vector<AuthorId>& nodes() const { return names_; }
  const AuthorId& node(NodeIndex i) const { return names_[static_cast<std::size_t>(i)]; }
  std::optional<NodeIndex> index_of(const AuthorId& a) const;
  bool has_node(const AuthorId& a) const { return index_of(a).has_value(); }

  // Distinct-neighbor adjacency lists, aligned with nodes().
  const std::vector<std::vector<NodeIndex>>& adjacency() const { return adjacency_; }
  int degree(NodeIndex i) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size());
  }

  int edge_weight(NodeIndex a, NodeIndex b) const;  // 0 when absent
  int edge_weight(const AuthorId& a, const AuthorId& b) const;
  bool has_edge(const AuthorId& a, const AuthorId& b) const {
    return edge_weight(a, b) > 0;
  }

  // Edges sorted by (a, b) node index.
  std::vector<Edge> edges() const;

  // Structural equality on author names, edge weights, year, and the
  // weighted link sum; node numbering does not matter.
  bool equivalent(const Snapshot& other) const;

 private:
  friend class SnapshotSeries;
  friend struct SnapshotBuilder;

  static std::uint64_t edge_key(NodeIndex a, NodeIndex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  int year_ = 0;
  std::vector<AuthorId> names_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::unordered_map<std::uint64_t, int> edges_;  // key (lo,hi) -> weight
  std::int64_t weighted_link_sum_ = 0;
};

// What one year added to the cumulative network.
struct YearDelta {
  int year = 0;
  // Authors whose first multi-authored publication is this year, sorted.
  std::vector<AuthorId> new_authors;
  // Every pair increment contributed by this year's publications, as
  // canonically ordered (a < b) pairs; repeats kept (multiset semantics).
  std::vector<std::pair<AuthorId, AuthorId>> new_pair_increments;
};

// Builds the snapshot at every year of [min_year, max_year] in one
// incremental pass, plus the per-year deltas. Years without publications
// get a snapshot identical to the previous year and an empty delta.
class SnapshotSeries {
 public:
  explicit SnapshotSeries(const TemporalCorpus& corpus);

  int min_year() const { return min_year_; }
  int max_year() const { return max_year_; }

  // Throws RangeError (naming the valid range) outside [min_year, max_year].
  const Snapshot& at(int year) const;
  // Snapshot(year - 1); the empty snapshot when year == min_year.
  const Snapshot& prior(int year) const;
  const YearDelta& delta(int year) const;

 private:
  void check_year(int year) const;

  int min_year_ = 0;
  int max_year_ = 0;
  Snapshot empty_;
  std::vector<Snapshot> snapshots_;  // index year - min_year
  std::vector<YearDelta> deltas_;
};

// One-off cumulative snapshot built from scratch; equivalent to
// SnapshotSeries::at(year) by construction and checked against it in tests.
Snapshot cumulative_snapshot(const TemporalCorpus& corpus, int year);

struct GrowthRow {
  int year = 0;
  // New entries this year.
  std::int64_t publications = 0;  // all publications, single-authored included
  std::int64_t new_authors = 0;
  std::int64_t new_links = 0;  // pair increments
  // Cumulative through this year.
  std::int64_t cum_publications = 0;
  std::int64_t cum_authors = 0;
  std::int64_t cum_weighted_links = 0;
  std::int64_t cum_distinct_links = 0;
};

// One row per year in [min_year, max_year]. The two cumulative averages
// (weighted links per author, distinct links per author) are derived from
// the counts at formatting time; both are reported because either reading
// of "links per author" is defensible for cumulative data.
std::vector<GrowthRow> growth_report(const TemporalCorpus& corpus);

void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out);

// DOT export with the collaboration count as edge attribute `weight`.
// Nodes and edges are emitted in sorted name order.
void write_dot(const Snapshot& snapshot, std::ostream& out);

}  // namespace centrum
