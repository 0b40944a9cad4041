#include "centrum/centrality.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

#include "centrum/errors.hpp"
#include "centrum/format.hpp"
#include "centrum/parallel.hpp"

namespace centrum {

namespace {

// Sources per parallel work unit. Fixed so that chunk boundaries (and the
// floating-point reduction order) never depend on the thread count.
constexpr int kSourceChunk = 32;

// Single-source shortest-path counts via BFS. Fills dist (-1 unreachable),
// sigma (geodesic counts), and the visit stack in non-decreasing distance
// order. Buffers are caller-owned so per-source loops can reuse them.
void bfs_counting(const AdjacencyList& graph, NodeIndex source,
                  std::vector<int>& dist, std::vector<double>& sigma,
                  std::vector<NodeIndex>& order) {
  const std::size_t n = graph.size();
  dist.assign(n, -1);
  sigma.assign(n, 0.0);
  order.clear();
  dist[static_cast<std::size_t>(source)] = 0;
  sigma[static_cast<std::size_t>(source)] = 1.0;
  std::queue<NodeIndex> queue;
  queue.push(source);
  while (!queue.empty()) {
    NodeIndex v = queue.front();
    queue.pop();
    order.push_back(v);
    for (NodeIndex w : graph[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push(w);
      }
      if (dist[static_cast<std::size_t>(w)] ==
          dist[static_cast<std::size_t>(v)] + 1) {
        sigma[static_cast<std::size_t>(w)] += sigma[static_cast<std::size_t>(v)];
      }
    }
  }
}

}  // namespace

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::closeness: return "closeness";
    case Measure::betweenness: return "betweenness";
  }
  return "?";
}

Measure measure_from_name(const std::string& name) {
  if (name == "degree") return Measure::degree;
  if (name == "closeness") return Measure::closeness;
  if (name == "betweenness") return Measure::betweenness;
  throw ValidationError("unknown centrality measure '" + name + "'");
}

std::vector<double> degree_values(const AdjacencyList& graph) {
  std::vector<double> values(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    values[v] = static_cast<double>(graph[v].size());
  }
  return values;
}

std::vector<double> closeness_values(const AdjacencyList& graph, int threads) {
  const int n = static_cast<int>(graph.size());
  std::vector<double> values(graph.size(), 0.0);
  // Each source writes only its own slot, so no reduction is needed.
  parallel_chunks(n, kSourceChunk, threads, [&](int, int begin, int end) {
    std::vector<int> dist;
    std::vector<double> sigma;
    std::vector<NodeIndex> order;
    for (int s = begin; s < end; ++s) {
      bfs_counting(graph, s, dist, sigma, order);
      double sum = 0.0;
      for (NodeIndex v : order) {
        if (v != s) sum += 1.0 / dist[static_cast<std::size_t>(v)];
      }
      values[static_cast<std::size_t>(s)] = sum;
    }
  });
  return values;
}

std::vector<double> betweenness_values(const AdjacencyList& graph, int threads) {
  const int n = static_cast<int>(graph.size());
  if (n == 0) return {};
  const int num_chunks = (n + kSourceChunk - 1) / kSourceChunk;
  std::vector<std::vector<double>> partials(static_cast<std::size_t>(num_chunks));

  parallel_chunks(n, kSourceChunk, threads, [&](int chunk, int begin, int end) {
    std::vector<double>& acc = partials[static_cast<std::size_t>(chunk)];
    acc.assign(graph.size(), 0.0);
    std::vector<int> dist;
    std::vector<double> sigma;
    std::vector<NodeIndex> order;
    std::vector<double> delta(graph.size());
    for (int s = begin; s < end; ++s) {
      bfs_counting(graph, s, dist, sigma, order);
      std::fill(delta.begin(), delta.end(), 0.0);
      // Dependency accumulation in reverse BFS order.
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeIndex w = *it;
        for (NodeIndex v : graph[static_cast<std::size_t>(w)]) {
          if (dist[static_cast<std::size_t>(v)] ==
              dist[static_cast<std::size_t>(w)] - 1) {
            delta[static_cast<std::size_t>(v)] +=
                sigma[static_cast<std::size_t>(v)] /
                sigma[static_cast<std::size_t>(w)] *
                (1.0 + delta[static_cast<std::size_t>(w)]);
          }
        }
        if (w != s) acc[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
      }
    }
  });

  // Ordered pairs were accumulated; halve for unordered ones. Reducing the
  // chunk partials in index order keeps the result bit-identical across
  // thread counts.
  std::vector<double> values(graph.size(), 0.0);
  for (const auto& acc : partials) {
    if (acc.empty()) continue;
    for (std::size_t v = 0; v < values.size(); ++v) values[v] += acc[v];
  }
  for (double& v : values) v *= 0.5;
  return values;
}

namespace {

CentralityVector to_vector(const Snapshot& snapshot, Measure measure,
                           std::vector<double> values) {
  CentralityVector result;
  result.measure = measure;
  result.snapshot_year = snapshot.year();
  result.entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    result.entries.emplace_back(snapshot.node(static_cast<NodeIndex>(i)), values[i]);
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return result;
}

}  // namespace

const double* CentralityVector::find(const AuthorId& author) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), author,
      [](const auto& entry, const AuthorId& a) { return entry.first < a; });
  if (it == entries.end() || it->first != author) return nullptr;
  return &it->second;
}

CentralityVector degree_centrality(const Snapshot& snapshot) {
  return to_vector(snapshot, Measure::degree, degree_values(snapshot.adjacency()));
}

CentralityVector closeness_centrality(const Snapshot& snapshot, int threads) {
  return to_vector(snapshot, Measure::closeness,
                   closeness_values(snapshot.adjacency(), threads));
}

CentralityVector betweenness_centrality(const Snapshot& snapshot, int threads) {
  return to_vector(snapshot, Measure::betweenness,
                   betweenness_values(snapshot.adjacency(), threads));
}

AllCentralities all_centralities(const Snapshot& snapshot, int threads) {
  return AllCentralities{degree_centrality(snapshot),
                         closeness_centrality(snapshot, threads),
                         betweenness_centrality(snapshot, threads)};
}

void write_centrality_csv(const std::vector<CentralityVector>& vectors,
                          std::ostream& out) {
  out << "author,measure,value\n";
  for (const CentralityVector& vec : vectors) {
    auto rows = vec.entries;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    for (const auto& [author, value] : rows) {
      out << csv_field(author.str()) << ',' << measure_name(vec.measure) << ','
          << format_f4(value) << '\n';
    }
  }
}

}  // namespace centrum
