#include "centrum/graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "centrum/errors.hpp"
#include "centrum/format.hpp"

namespace centrum {

std::optional<NodeIndex> Snapshot::index_of(const AuthorId& a) const {
  auto it = index_.find(a.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Snapshot::edge_weight(NodeIndex a, NodeIndex b) const {
  if (a == b) return 0;
  auto it = edges_.find(edge_key(a, b));
  return it == edges_.end() ? 0 : it->second;
}

int Snapshot::edge_weight(const AuthorId& a, const AuthorId& b) const {
  auto ia = index_of(a);
  auto ib = index_of(b);
  if (!ia || !ib) return 0;
  return edge_weight(*ia, *ib);
}

std::vector<Edge> Snapshot::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, weight] : edges_) {
    out.push_back(Edge{static_cast<NodeIndex>(key >> 32),
                       static_cast<NodeIndex>(key & 0xffffffffu), weight});
  }
  std::sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  return out;
}

bool Snapshot::equivalent(const Snapshot& other) const {
  if (year_ != other.year_ || names_.size() != other.names_.size() ||
      edges_.size() != other.edges_.size() ||
      weighted_link_sum_ != other.weighted_link_sum_) {
    return false;
  }
  for (const AuthorId& a : names_) {
    if (!other.has_node(a)) return false;
  }
  for (const auto& [key, weight] : edges_) {
    const AuthorId& a = names_[key >> 32];
    const AuthorId& b = names_[key & 0xffffffffu];
    if (other.edge_weight(a, b) != weight) return false;
  }
  return true;
}

// Folds one year of publications into the running graph and records the
// delta. Publications must arrive sorted by id for deterministic node order.
struct SnapshotBuilder {
  static YearDelta fold_year(Snapshot& graph, int year,
                             const std::vector<Publication>& pubs);
};

YearDelta SnapshotBuilder::fold_year(Snapshot& graph, int year,
                                     const std::vector<Publication>& pubs) {
  YearDelta delta;
  delta.year = year;
  graph.year_ = year;

  std::set<AuthorId> entrants;
  auto node_index = [&](const AuthorId& a) {
    auto it = graph.index_.find(a.str());
    if (it != graph.index_.end()) return it->second;
    NodeIndex idx = static_cast<NodeIndex>(graph.names_.size());
    graph.names_.push_back(a);
    graph.index_.emplace(a.str(), idx);
    graph.adjacency_.emplace_back();
    entrants.insert(a);
    return idx;
  };

  for (const Publication& p : pubs) {
    if (!p.multi_author()) continue;
    std::vector<NodeIndex> members;
    members.reserve(p.authors.size());
    for (const AuthorId& a : p.authors) members.push_back(node_index(a));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        NodeIndex lo = std::min(members[i], members[j]);
        NodeIndex hi = std::max(members[i], members[j]);
        auto [it, inserted] = graph.edges_.emplace(Snapshot::edge_key(lo, hi), 1);
        if (inserted) {
          graph.adjacency_[static_cast<std::size_t>(lo)].push_back(hi);
          graph.adjacency_[static_cast<std::size_t>(hi)].push_back(lo);
        } else {
          ++it->second;
        }
        ++graph.weighted_link_sum_;
        const AuthorId& a = graph.names_[static_cast<std::size_t>(lo)];
        const AuthorId& b = graph.names_[static_cast<std::size_t>(hi)];
        if (a < b) {
          delta.new_pair_increments.emplace_back(a, b);
        } else {
          delta.new_pair_increments.emplace_back(b, a);
        }
      }
    }
  }
  delta.new_authors.assign(entrants.begin(), entrants.end());
  std::sort(delta.new_pair_increments.begin(), delta.new_pair_increments.end());
  return delta;
}

SnapshotSeries::SnapshotSeries(const TemporalCorpus& corpus) {
  if (corpus.empty()) {
    throw ValidationError("cannot build snapshots of an empty corpus");
  }
  min_year_ = corpus.min_year();
  max_year_ = corpus.max_year();
  empty_.year_ = min_year_ - 1;

  Snapshot running;
  for (int year = min_year_; year <= max_year_; ++year) {
    deltas_.push_back(
        SnapshotBuilder::fold_year(running, year, corpus.publications_in(year)));
    snapshots_.push_back(running);  // freeze a copy for this year
  }
}

void SnapshotSeries::check_year(int year) const {
  if (year < min_year_ || year > max_year_) {
    throw RangeError("year " + std::to_string(year) + " outside corpus range [" +
                     std::to_string(min_year_) + ", " + std::to_string(max_year_) + "]");
  }
}

const Snapshot& SnapshotSeries::at(int year) const {
  check_year(year);
  return snapshots_[static_cast<std::size_t>(year - min_year_)];
}

const Snapshot& SnapshotSeries::prior(int year) const {
  check_year(year);
  if (year == min_year_) return empty_;
  return snapshots_[static_cast<std::size_t>(year - 1 - min_year_)];
}

const YearDelta& SnapshotSeries::delta(int year) const {
  check_year(year);
  return deltas_[static_cast<std::size_t>(year - min_year_)];
}

Snapshot cumulative_snapshot(const TemporalCorpus& corpus, int year) {
  if (corpus.empty() || year < corpus.min_year() || year > corpus.max_year()) {
    int lo = corpus.empty() ? 0 : corpus.min_year();
    int hi = corpus.empty() ? 0 : corpus.max_year();
    throw RangeError("year " + std::to_string(year) + " outside corpus range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  Snapshot graph;
  for (int y = corpus.min_year(); y <= year; ++y) {
    SnapshotBuilder::fold_year(graph, y, corpus.publications_in(y));
  }
  return graph;
}

std::vector<GrowthRow> growth_report(const TemporalCorpus& corpus) {
  SnapshotSeries series(corpus);
  std::vector<GrowthRow> rows;
  std::int64_t cum_pubs = 0;
  for (int year = corpus.min_year(); year <= corpus.max_year(); ++year) {
    const Snapshot& snap = series.at(year);
    const YearDelta& delta = series.delta(year);
    GrowthRow row;
    row.year = year;
    row.publications = static_cast<std::int64_t>(corpus.publications_in(year).size());
    row.new_authors = static_cast<std::int64_t>(delta.new_authors.size());
    row.new_links = static_cast<std::int64_t>(delta.new_pair_increments.size());
    cum_pubs += row.publications;
    row.cum_publications = cum_pubs;
    row.cum_authors = snap.node_count();
    row.cum_weighted_links = snap.weighted_link_sum();
    row.cum_distinct_links = snap.distinct_edge_count();
    rows.push_back(row);
  }
  return rows;
}

void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out) {
  out << "year,new_publications,new_authors,new_links,new_avg_links_per_author,"
         "cum_publications,cum_authors,cum_weighted_links,cum_distinct_links,"
         "cum_avg_weighted_links_per_author,cum_avg_distinct_links_per_author\n";
  for (const GrowthRow& r : rows) {
    out << r.year << ',' << r.publications << ',' << r.new_authors << ','
        << r.new_links << ',' << format_ratio(r.new_links, r.new_authors) << ','
        << r.cum_publications << ',' << r.cum_authors << ',' << r.cum_weighted_links
        << ',' << r.cum_distinct_links << ','
        << format_ratio(r.cum_weighted_links, r.cum_authors) << ','
        << format_ratio(r.cum_distinct_links, r.cum_authors) << '\n';
  }
}

void write_dot(const Snapshot& snapshot, std::ostream& out) {
  std::vector<AuthorId> sorted_nodes = snapshot.nodes();
  std::sort(sorted_nodes.begin(), sorted_nodes.end());

  out << "graph coauthorship {\n";
  for (const AuthorId& a : sorted_nodes) {
    out << "  " << dot_quote(a.str()) << ";\n";
  }
  std::map<std::pair<std::string, std::string>, int> sorted_edges;
  for (const Edge& e : snapshot.edges()) {
    std::string a = snapshot.node(e.a).str();
    std::string b = snapshot.node(e.b).str();
    if (b < a) std::swap(a, b);
    sorted_edges[{std::move(a), std::move(b)}] = e.weight;
  }
  for (const auto& [pair, weight] : sorted_edges) {
    out << "  " << dot_quote(pair.first) << " -- " << dot_quote(pair.second)
        << " [weight=" << weight << "];\n";
  }
  out << "}\n";
}

}  // namespace centrum
