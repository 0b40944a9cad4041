#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "centrum/graph.hpp"

namespace centrum {

enum class Measure { degree, closeness, betweenness };

inline constexpr std::array<Measure, 3> kAllMeasures = {
    Measure::degree, Measure::closeness, Measure::betweenness};

const char* measure_name(Measure m);
// Throws ValidationError on anything but degree/closeness/betweenness/all;
// "all" maps to nullopt at the CLI layer, so this accepts only the three.
Measure measure_from_name(const std::string& name);

// Index-aligned adjacency lists; the working representation for the
// traversal kernels. Tests build arbitrary graphs (isolated vertices
// included) directly in this form.
using AdjacencyList = std::vector<std::vector<NodeIndex>>;

// Distinct-neighbor count per vertex. Edge weights are ignored by all
// three measures: distances are geodesic on the unweighted simple graph.
std::vector<double> degree_values(const AdjacencyList& graph);

// Sum over other vertices of 1/d(u,v), with unreachable pairs contributing
// 0. This reciprocal form stays finite on disconnected graphs.
std::vector<double> closeness_values(const AdjacencyList& graph, int threads = 0);

// Brandes dependency accumulation over unordered pairs, endpoints excluded,
// no normalization. Pairs in different components contribute nothing.
// Per-source results are combined in a fixed chunk order, so the output is
// identical for any thread count.
std::vector<double> betweenness_values(const AdjacencyList& graph, int threads = 0);

// Per-author values of one measure on one snapshot.
struct CentralityVector {
  Measure measure = Measure::degree;
  int snapshot_year = 0;
  std::vector<std::pair<AuthorId, double>> entries;  // sorted by author

  const double* find(const AuthorId& author) const;
};

CentralityVector degree_centrality(const Snapshot& snapshot);
CentralityVector closeness_centrality(const Snapshot& snapshot, int threads = 0);
CentralityVector betweenness_centrality(const Snapshot& snapshot, int threads = 0);

struct AllCentralities {
  CentralityVector degree;
  CentralityVector closeness;
  CentralityVector betweenness;
};

AllCentralities all_centralities(const Snapshot& snapshot, int threads = 0);

// CSV `author,measure,value`, each measure block sorted by value descending
// then author ascending.
void write_centrality_csv(const std::vector<CentralityVector>& vectors,
                          std::ostream& out);

}  // namespace centrum
