#include "centrum/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <utility>

#include "centrum/centrality.hpp"
#include "centrum/errors.hpp"
#include "centrum/format.hpp"
#include "centrum/io.hpp"

namespace centrum {

const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::uniform: return "uniform";
    case KernelKind::degree: return "degree";
    case KernelKind::closeness: return "closeness";
    case KernelKind::betweenness: return "betweenness";
  }
  return "uniform";
}

KernelKind kernel_from_name(const std::string& name) {
  if (name == "uniform") return KernelKind::uniform;
  if (name == "degree") return KernelKind::degree;
  if (name == "closeness") return KernelKind::closeness;
  if (name == "betweenness") return KernelKind::betweenness;
  throw ValidationError("unknown kernel '" + name +
                        "' (expected uniform, degree, closeness, or betweenness)");
}

void SimConfig::validate() {
  if (years < 2) throw ValidationError("simulation needs years >= 2");
  if (pubs_per_year < 1) throw ValidationError("simulation needs pubs_per_year >= 1");
  if (authors_per_pub.empty())
    throw ValidationError("authors_per_pub needs at least one weight");
  double total = 0.0;
  for (double w : authors_per_pub) {
    if (!std::isfinite(w) || w < 0.0)
      throw ValidationError("authors_per_pub weights must be finite and >= 0");
    total += w;
  }
  if (total <= 0.0) throw ValidationError("authors_per_pub weights sum to zero");
  for (double& w : authors_per_pub) w /= total;
  if (!(p_new_author >= 0.0 && p_new_author <= 1.0))
    throw ValidationError("p_new_author must lie in [0, 1]");
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw ValidationError("alpha must be finite and >= 0");
  if (!std::isfinite(epsilon) || epsilon <= 0.0)
    throw ValidationError("epsilon must be finite and > 0");
}

std::size_t SimRng::weighted_index(const std::vector<double>& weights, double total) {
  double u = uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  // Rounding can push u past the final partial sum; the last positive
  // weight owns that sliver.
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return weights.size() - 1;
}

std::vector<double> kernel_probabilities(const std::vector<double>& values,
                                         double alpha, double epsilon) {
  if (values.empty())
    throw ValidationError("attachment kernel needs a non-empty value vector");
  std::vector<double> probs(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    probs[i] = std::pow(values[i] + epsilon, alpha);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::vector<double> kernel_probabilities(const Snapshot& snapshot,
                                         const SimConfig& config, int threads) {
  const int n = snapshot.node_count();
  if (n == 0)
    throw ValidationError("attachment kernel needs a non-empty snapshot");

  std::vector<double> values;
  switch (config.kernel) {
    case KernelKind::uniform:
      values.assign(static_cast<std::size_t>(n), 0.0);
      break;
    case KernelKind::degree:
      values = degree_values(snapshot.adjacency());
      break;
    case KernelKind::closeness:
      values = closeness_values(snapshot.adjacency(), threads);
      break;
    case KernelKind::betweenness:
      values = betweenness_values(snapshot.adjacency(), threads);
      break;
  }
  return kernel_probabilities(values, config.alpha, config.epsilon);
}

namespace {

AuthorId make_author(int serial) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "a%06d", serial);
  return normalize_author(buf);
}

std::string make_pub_id(int serial) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "s%06d", serial);
  return buf;
}

// 2 + weighted draw over the size distribution (weights are normalized).
int draw_pub_size(SimRng& rng, const SimConfig& cfg) {
  return 2 + static_cast<int>(rng.weighted_index(cfg.authors_per_pub, 1.0));
}

// Kernel draw without replacement: picks an unchosen snapshot node with
// probability proportional to its kernel mass, or nothing when the pool is
// exhausted. Consumes one variate only when a pick is possible.
std::optional<NodeIndex> draw_existing(SimRng& rng, const std::vector<double>& probs,
                                       const std::vector<char>& chosen) {
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!chosen[i]) total += probs[i];
  }
  if (total <= 0.0) return std::nullopt;
  double u = rng.uniform01() * total;
  double acc = 0.0;
  NodeIndex last = -1;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (chosen[i]) continue;
    last = static_cast<NodeIndex>(i);
    acc += probs[i];
    if (u < acc) return last;
  }
  if (last >= 0) return last;
  return std::nullopt;
}

}  // namespace

SimTrace run_simulation(const SimConfig& config, int threads) {
  SimTrace trace;
  trace.config = config;
  trace.config.validate();
  const SimConfig& cfg = trace.config;

  SimRng rng(cfg.seed);
  std::vector<Publication> pubs;
  pubs.reserve(static_cast<std::size_t>(cfg.years) *
               static_cast<std::size_t>(cfg.pubs_per_year));
  int next_author = 1;
  int next_pub = 1;

  for (int step = 0; step < cfg.years; ++step) {
    const int year = kSimStartYear + step;

    Snapshot base;
    std::vector<double> probs;
    if (step > 0) {
      base = cumulative_snapshot(TemporalCorpus::from_publications(pubs), year - 1);
      probs = kernel_probabilities(base, cfg, threads);
      auto& recorded = trace.kernel_by_year[year];
      recorded.reserve(probs.size());
      for (std::size_t i = 0; i < probs.size(); ++i) {
        recorded.emplace_back(base.node(static_cast<NodeIndex>(i)), probs[i]);
      }
    }

    for (int p = 0; p < cfg.pubs_per_year; ++p) {
      const int size = draw_pub_size(rng, cfg);
      Publication pub;
      pub.id = make_pub_id(next_pub++);
      pub.year = year;
      pub.authors.reserve(static_cast<std::size_t>(size));
      std::vector<char> chosen(probs.size(), 0);
      for (int slot = 0; slot < size; ++slot) {
        bool take_new = step == 0 || rng.uniform01() < cfg.p_new_author;
        if (!take_new) {
          if (auto idx = draw_existing(rng, probs, chosen)) {
            chosen[static_cast<std::size_t>(*idx)] = 1;
            pub.authors.push_back(base.node(*idx));
            continue;
          }
          take_new = true;  // pool exhausted, spill to a new entrant
        }
        pub.authors.push_back(make_author(next_author++));
      }
      pubs.push_back(std::move(pub));
    }
  }

  trace.corpus = TemporalCorpus::from_publications(std::move(pubs));
  return trace;
}

std::string sim_header_line(const SimConfig& config) {
  std::string sizes;
  for (std::size_t i = 0; i < config.authors_per_pub.size(); ++i) {
    if (i > 0) sizes += ',';
    sizes += format_f4(config.authors_per_pub[i]);
  }
  std::string line = "# centrum-sim";
  line += " years=" + std::to_string(config.years);
  line += " pubs_per_year=" + std::to_string(config.pubs_per_year);
  line += " authors_per_pub=" + sizes;
  line += " p_new_author=" + format_f4(config.p_new_author);
  line += " kernel=";
  line += kernel_name(config.kernel);
  line += " alpha=" + format_f4(config.alpha);
  line += " epsilon=" + format_f4(config.epsilon);
  line += " seed=" + std::to_string(config.seed);
  line += " generator=";
  line += kGeneratorId;
  return line;
}

void write_sim_corpus(const SimTrace& trace, std::ostream& out) {
  out << sim_header_line(trace.config) << '\n';
  dump_jsonl(trace.corpus, out);
}

}  // namespace centrum
