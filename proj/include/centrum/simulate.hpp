#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "centrum/corpus.hpp"
#include "centrum/graph.hpp"

namespace centrum {

enum class KernelKind { uniform, degree, closeness, betweenness };
const char* kernel_name(KernelKind k);
KernelKind kernel_from_name(const std::string& name);

// Growth-model parameters. Each simulated year adds pubs_per_year
// publications; each author slot is a new entrant with probability
// p_new_author, otherwise an existing author drawn from the attachment
// kernel computed on the previous year-end snapshot.
struct SimConfig {
  int years = 10;
  int pubs_per_year = 20;
  // Weight of publication size 2, 3, ... (normalized by validate()).
  std::vector<double> authors_per_pub = {0.5, 0.3, 0.2};
  double p_new_author = 0.5;
  KernelKind kernel = KernelKind::uniform;
  double alpha = 1.0;
  double epsilon = 1.0;
  std::uint64_t seed = 1;

  // Throws ValidationError on bad parameters and normalizes
  // authors_per_pub so it sums to 1.
  void validate();
};

// Simulated years are numbered from this base so traces read like real
// corpora.
inline constexpr int kSimStartYear = 2001;

// The generator behind every stochastic draw; recorded in trace headers so
// a run can be reproduced from its header line alone.
inline constexpr const char* kGeneratorId = "mt19937_64";

// Deterministic draws on top of the named engine. Raw engine output is
// mapped to doubles and weighted picks here rather than through
// std::*_distribution, whose sequences vary across standard libraries.
class SimRng {
 public:
  explicit SimRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Index into weights proportional to weight; total must be the sum.
  std::size_t weighted_index(const std::vector<double>& weights, double total);

 private:
  std::mt19937_64 engine_;
};

// Attachment probabilities over explicit centrality values:
//   P(v) = (c(v) + epsilon)^alpha / sum_u (c(u) + epsilon)^alpha
// Sums to 1; throws ValidationError on an empty vector.
std::vector<double> kernel_probabilities(const std::vector<double>& values,
                                         double alpha, double epsilon);

// Same, with c taken from the configured measure on the snapshot
// (identically 0 for the uniform kernel), in snapshot node-index order.
// Throws ValidationError on an empty snapshot.
std::vector<double> kernel_probabilities(const Snapshot& snapshot,
                                         const SimConfig& config, int threads = 0);

struct SimTrace {
  TemporalCorpus corpus;
  // year -> (author, probability) over the snapshot the year sampled from;
  // present for every year after the bootstrap year.
  std::map<int, std::vector<std::pair<AuthorId, double>>> kernel_by_year;
  SimConfig config;  // validated/normalized form actually used
  std::string generator_id = kGeneratorId;
};

// Runs the growth model. Deterministic for a fixed config: the same seed
// always yields the same corpus. Year 1 is bootstrapped with all-new
// authors; existing-author draws are without replacement within one
// publication, renormalizing after each pick, and spill over to a new
// entrant if the pool is exhausted.
SimTrace run_simulation(const SimConfig& config, int threads = 0);

// One-line `# ...` header recording the config and generator id; the JSONL
// parser skips it, so a trace dump is directly consumable as a corpus.
std::string sim_header_line(const SimConfig& config);

// Header line followed by the canonical corpus dump.
void write_sim_corpus(const SimTrace& trace, std::ostream& out);

}  // namespace centrum
