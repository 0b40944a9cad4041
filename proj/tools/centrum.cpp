#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "centrum/centrality.hpp"
#include "centrum/errors.hpp"
#include "centrum/evolution.hpp"
#include "centrum/fixture.hpp"
#include "centrum/format.hpp"
#include "centrum/graph.hpp"
#include "centrum/io.hpp"
#include "centrum/simulate.hpp"
#include "centrum/stats.hpp"
#include "centrum/version.hpp"

namespace {

using centrum::ValidationError;

// Accumulates what a subcommand read and wrote; dumped as JSON after every
// other output, so a manifest only ever describes files that exist.
struct RunManifest {
  std::string path;  // empty disables the manifest
  std::string subcommand;
  std::string invocation;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void add_input(const std::string& p) {
    if (p != "-") inputs.push_back(p);
  }
  void add_output(const std::string& p) {
    if (p != "-") outputs.push_back(p);
  }

  void write() const {
    if (path.empty()) return;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(centrum::fnv1a64(invocation)));
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["config_hash"] = hash;
    j["tool_version"] = centrum::kVersion;
    j["duration_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  start)
            .count();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot open manifest file '" + path + "'");
    f << j.dump(2) << '\n';
  }
};

centrum::TemporalCorpus load_corpus(const std::string& in, bool quiet) {
  centrum::ParseOutcome outcome;
  if (in == "-") {
    outcome = centrum::parse_publications(std::cin, centrum::InputFormat::jsonl);
  } else {
    std::ifstream f(in, std::ios::binary);
    if (!f) throw ValidationError("cannot open input file '" + in + "'");
    outcome = centrum::parse_publications(f, centrum::infer_format(in));
  }
  if (!quiet) {
    for (const std::string& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
  }
  return std::move(outcome.corpus);
}

// Runs `emit` against the named file, or standard output for "-".
void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& emit) {
  if (path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open output file '" + path + "'");
  emit(f);
  if (!f) throw ValidationError("failed while writing '" + path + "'");
}

std::vector<centrum::Measure> measures_for(const std::string& name) {
  if (name == "all") {
    return {centrum::kAllMeasures.begin(), centrum::kAllMeasures.end()};
  }
  return {centrum::measure_from_name(name)};
}

// Applies a TOML config file to the simulation parameters. Keys mirror the
// flag names; values given on the command line win over the file. CLI11's
// own TOML reader does the lexing, this function only maps the fields.
void apply_sim_config(const std::string& path, CLI::App* simulate,
                      centrum::SimConfig& cfg, std::string& kernel) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML{}.from_file(path);
  } catch (const CLI::Error&) {
    throw ValidationError("cannot read config file '" + path + "'");
  }

  auto flag_given = [&](const std::string& flag) {
    return simulate->get_option("--" + flag)->count() > 0;
  };
  auto one_value = [&](const CLI::ConfigItem& item) -> const std::string& {
    if (item.inputs.size() != 1) {
      throw ValidationError("config key '" + item.name + "' expects one value");
    }
    return item.inputs.front();
  };
  auto parse_double = [&](const CLI::ConfigItem& item, const std::string& text) {
    try {
      return std::stod(text);
    } catch (const std::exception&) {
      throw ValidationError("config key '" + item.name + "': bad number '" + text + "'");
    }
  };
  auto parse_int = [&](const CLI::ConfigItem& item) {
    try {
      return std::stoi(one_value(item));
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception&) {
      throw ValidationError("config key '" + item.name + "': bad integer");
    }
  };

  constexpr std::array<const char*, 8> kKeys = {
      "years", "pubs_per_year", "authors_per_pub", "p_new_author",
      "kernel", "alpha",         "epsilon",         "seed"};
  for (const CLI::ConfigItem& item : items) {
    if (!item.parents.empty()) {
      throw ValidationError("unknown config section '" + item.parents.front() + "'");
    }
    if (std::find_if(kKeys.begin(), kKeys.end(), [&](const char* k) {
          return item.name == k;
        }) == kKeys.end()) {
      throw ValidationError("unknown config key '" + item.name + "'");
    }
    if (flag_given(item.name)) continue;  // the command line wins
    if (item.name == "years") {
      cfg.years = parse_int(item);
    } else if (item.name == "pubs_per_year") {
      cfg.pubs_per_year = parse_int(item);
    } else if (item.name == "authors_per_pub") {
      cfg.authors_per_pub.clear();
      for (const std::string& text : item.inputs) {
        cfg.authors_per_pub.push_back(parse_double(item, text));
      }
    } else if (item.name == "p_new_author") {
      cfg.p_new_author = parse_double(item, one_value(item));
    } else if (item.name == "kernel") {
      kernel = one_value(item);
    } else if (item.name == "alpha") {
      cfg.alpha = parse_double(item, one_value(item));
    } else if (item.name == "epsilon") {
      cfg.epsilon = parse_double(item, one_value(item));
    } else {
      try {
        cfg.seed = std::stoull(one_value(item));
      } catch (const ValidationError&) {
        throw;
      } catch (const std::exception&) {
        throw ValidationError("config key 'seed': bad integer");
      }
    }
  }
}

struct CommonFlags {
  std::string in = "-";
  bool quiet = false;
  std::string manifest_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--in", flags.in, "input corpus (JSONL, or CSV by extension; - for stdin)")
        ->capture_default_str();
  }
  cmd->add_flag("--quiet", flags.quiet, "suppress informational output");
  cmd->add_option("--manifest", flags.manifest_path,
                  "write a JSON run manifest to this path");
}

}  // namespace

int main(int argc, char** argv) {
  std::string invocation;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) invocation += ' ';
    invocation += argv[i];
  }

  CLI::App app{"co-authorship network analysis pipeline"};
  app.set_version_flag("--version", centrum::kVersion);
  app.require_subcommand(1);

  RunManifest manifest;
  manifest.invocation = invocation;

  // ingest: validate and summarize a corpus, optionally re-emit it in
  // canonical JSONL.
  auto* ingest = app.add_subcommand("ingest", "parse, validate, and summarize a corpus");
  CommonFlags ingest_flags;
  std::string ingest_out;
  add_common(ingest, ingest_flags);
  ingest->add_option("--out", ingest_out, "write the canonical JSONL dump here (- for stdout)");
  ingest->callback([&] {
    auto corpus = load_corpus(ingest_flags.in, ingest_flags.quiet);
    manifest.add_input(ingest_flags.in);
    if (!ingest_out.empty()) {
      with_output(ingest_out, [&](std::ostream& out) { centrum::dump_jsonl(corpus, out); });
      manifest.add_output(ingest_out);
    }
    if (!ingest_flags.quiet) {
      std::cout << "publications: " << corpus.publication_count() << '\n';
      if (!corpus.empty()) {
        std::cout << "years: " << corpus.min_year() << ".." << corpus.max_year() << '\n';
      }
      std::cout << "authors in corpus: " << corpus.authors_in_corpus() << '\n'
                << "authors in network: " << corpus.authors_in_network() << '\n';
    }
  });

  // growth: the per-year network growth table.
  auto* growth = app.add_subcommand("growth", "per-year growth report CSV");
  CommonFlags growth_flags;
  std::string growth_out = "-";
  add_common(growth, growth_flags);
  growth->add_option("--out", growth_out, "output CSV path (- for stdout)")
      ->capture_default_str();
  growth->callback([&] {
    auto corpus = load_corpus(growth_flags.in, growth_flags.quiet);
    manifest.add_input(growth_flags.in);
    auto rows = centrum::growth_report(corpus);
    with_output(growth_out, [&](std::ostream& out) { centrum::write_growth_csv(rows, out); });
    manifest.add_output(growth_out);
  });

  // snapshot: cumulative graph export.
  auto* snapshot = app.add_subcommand("snapshot", "export a cumulative year-end graph as DOT");
  CommonFlags snapshot_flags;
  int snapshot_year = 0;
  std::string snapshot_dot = "-";
  add_common(snapshot, snapshot_flags);
  snapshot->add_option("--year", snapshot_year, "snapshot year")->required();
  snapshot->add_option("--dot", snapshot_dot, "output DOT path (- for stdout)")
      ->capture_default_str();
  snapshot->callback([&] {
    auto corpus = load_corpus(snapshot_flags.in, snapshot_flags.quiet);
    manifest.add_input(snapshot_flags.in);
    centrum::SnapshotSeries series(corpus);
    const centrum::Snapshot& snap = series.at(snapshot_year);
    with_output(snapshot_dot, [&](std::ostream& out) { centrum::write_dot(snap, out); });
    manifest.add_output(snapshot_dot);
  });

  // centrality: per-author values of one or all measures on one snapshot.
  auto* centrality = app.add_subcommand("centrality", "centrality values on a snapshot");
  CommonFlags centrality_flags;
  int centrality_year = 0;
  std::string centrality_measure = "all";
  std::string centrality_out = "-";
  int centrality_threads = 0;
  add_common(centrality, centrality_flags);
  centrality->add_option("--year", centrality_year, "snapshot year")->required();
  centrality->add_option("--measure", centrality_measure,
                         "degree, closeness, betweenness, or all")
      ->capture_default_str();
  centrality->add_option("--out", centrality_out, "output CSV path (- for stdout)")
      ->capture_default_str();
  centrality->add_option("--threads", centrality_threads, "worker threads (0 = auto)");
  centrality->callback([&] {
    auto corpus = load_corpus(centrality_flags.in, centrality_flags.quiet);
    manifest.add_input(centrality_flags.in);
    centrum::SnapshotSeries series(corpus);
    const centrum::Snapshot& snap = series.at(centrality_year);
    std::vector<centrum::CentralityVector> vectors;
    for (centrum::Measure m : measures_for(centrality_measure)) {
      switch (m) {
        case centrum::Measure::degree:
          vectors.push_back(centrum::degree_centrality(snap));
          break;
        case centrum::Measure::closeness:
          vectors.push_back(centrum::closeness_centrality(snap, centrality_threads));
          break;
        case centrum::Measure::betweenness:
          vectors.push_back(centrum::betweenness_centrality(snap, centrality_threads));
          break;
      }
    }
    with_output(centrality_out,
                [&](std::ostream& out) { centrum::write_centrality_csv(vectors, out); });
    manifest.add_output(centrality_out);
  });

  // evolve-report: the per-year attachment tables.
  auto* evolve = app.add_subcommand("evolve-report", "author and link attachment tables");
  CommonFlags evolve_flags;
  std::string evolve_tables = "2,3";
  std::string evolve_out_dir = ".";
  add_common(evolve, evolve_flags);
  evolve->add_option("--tables", evolve_tables, "comma list out of {2,3}")
      ->capture_default_str();
  evolve->add_option("--out-dir", evolve_out_dir, "directory for the table CSVs")
      ->capture_default_str();
  evolve->callback([&] {
    bool want_table2 = false;
    bool want_table3 = false;
    std::stringstream parts(evolve_tables);
    std::string part;
    while (std::getline(parts, part, ',')) {
      if (part == "2") {
        want_table2 = true;
      } else if (part == "3") {
        want_table3 = true;
      } else {
        throw ValidationError("unknown table '" + part + "' (expected 2 or 3)");
      }
    }
    if (!want_table2 && !want_table3) throw ValidationError("no tables selected");

    auto corpus = load_corpus(evolve_flags.in, evolve_flags.quiet);
    manifest.add_input(evolve_flags.in);
    centrum::SnapshotSeries series(corpus);

    std::error_code ec;
    std::filesystem::create_directories(evolve_out_dir, ec);
    if (ec) {
      throw ValidationError("cannot create output directory '" + evolve_out_dir + "'");
    }
    auto table_path = [&](const char* name) {
      return (std::filesystem::path(evolve_out_dir) / name).string();
    };
    if (want_table2) {
      std::string path = table_path("table2.csv");
      with_output(path,
                  [&](std::ostream& out) { centrum::write_author_table_csv(series, out); });
      manifest.add_output(path);
    }
    if (want_table3) {
      std::string path = table_path("table3.csv");
      with_output(path,
                  [&](std::ostream& out) { centrum::write_link_table_csv(series, out); });
      manifest.add_output(path);
    }
  });

  // correlate: Spearman between year-t centralities and year-t+1 attachment.
  auto* correlate = app.add_subcommand(
      "correlate", "centrality vs next-year attachment correlations");
  CommonFlags correlate_flags;
  std::string correlate_target;
  std::string correlate_out = "-";
  centrum::ReportOptions correlate_opts;
  add_common(correlate, correlate_flags);
  correlate
      ->add_option("--target", correlate_target, "new-authors, new-links, or coauthors")
      ->required();
  correlate->add_option("--out", correlate_out, "output CSV path (- for stdout)")
      ->capture_default_str();
  correlate->add_option("--threads", correlate_opts.threads, "worker threads (0 = auto)");
  correlate->add_flag("--exact-p", correlate_opts.exact_p,
                      "exact permutation p-values where n <= 12");
  correlate->callback([&] {
    auto corpus = load_corpus(correlate_flags.in, correlate_flags.quiet);
    manifest.add_input(correlate_flags.in);
    auto rows = centrum::correlation_report(corpus, centrum::kAllMeasures,
                                            centrum::target_from_name(correlate_target),
                                            correlate_opts);
    with_output(correlate_out,
                [&](std::ostream& out) { centrum::write_correlation_csv(rows, out); });
    manifest.add_output(correlate_out);
  });

  // mean-split: low/high group means of next-year new-author attachment.
  auto* mean_split = app.add_subcommand(
      "mean-split", "attachment means for below/above-mean centrality groups");
  CommonFlags mean_split_flags;
  std::string mean_split_out = "-";
  centrum::ReportOptions mean_split_opts;
  add_common(mean_split, mean_split_flags);
  mean_split->add_option("--out", mean_split_out, "output CSV path (- for stdout)")
      ->capture_default_str();
  mean_split->add_option("--threads", mean_split_opts.threads, "worker threads (0 = auto)");
  mean_split->callback([&] {
    auto corpus = load_corpus(mean_split_flags.in, mean_split_flags.quiet);
    manifest.add_input(mean_split_flags.in);
    auto rows =
        centrum::mean_split_report(corpus, centrum::kAllMeasures, mean_split_opts);
    with_output(mean_split_out,
                [&](std::ostream& out) { centrum::write_mean_split_csv(rows, out); });
    manifest.add_output(mean_split_out);
  });

  // simulate: preferential-attachment growth model.
  auto* simulate = app.add_subcommand("simulate", "generate a synthetic corpus");
  CommonFlags simulate_flags;
  centrum::SimConfig sim_cfg;
  std::string sim_kernel = "uniform";
  std::string simulate_out = "-";
  int simulate_threads = 0;
  std::string sim_config_path;
  add_common(simulate, simulate_flags, /*with_input=*/false);
  simulate->add_option("--config", sim_config_path,
                       "TOML config; keys mirror the flag names");
  simulate->add_option("--years", sim_cfg.years, "simulated years")->capture_default_str();
  simulate->add_option("--pubs_per_year", sim_cfg.pubs_per_year, "publications per year")
      ->capture_default_str();
  simulate
      ->add_option("--authors_per_pub", sim_cfg.authors_per_pub,
                   "weights for publication sizes 2, 3, ...")
      ->capture_default_str();
  simulate
      ->add_option("--p_new_author", sim_cfg.p_new_author,
                   "probability an author slot is a new entrant")
      ->capture_default_str();
  simulate
      ->add_option("--kernel", sim_kernel, "uniform, degree, closeness, or betweenness")
      ->capture_default_str();
  simulate->add_option("--alpha", sim_cfg.alpha, "kernel exponent")->capture_default_str();
  simulate->add_option("--epsilon", sim_cfg.epsilon, "additive smoothing")
      ->capture_default_str();
  simulate->add_option("--seed", sim_cfg.seed, "random seed")->capture_default_str();
  simulate->add_option("--out", simulate_out, "output corpus path (- for stdout)")
      ->capture_default_str();
  simulate->add_option("--threads", simulate_threads, "worker threads (0 = auto)");
  simulate->callback([&] {
    if (!sim_config_path.empty()) {
      apply_sim_config(sim_config_path, simulate, sim_cfg, sim_kernel);
      manifest.add_input(sim_config_path);
    }
    sim_cfg.kernel = centrum::kernel_from_name(sim_kernel);
    centrum::SimTrace trace = centrum::run_simulation(sim_cfg, simulate_threads);
    with_output(simulate_out,
                [&](std::ostream& out) { centrum::write_sim_corpus(trace, out); });
    manifest.add_output(simulate_out);
    if (!simulate_flags.quiet) {
      std::cerr << "simulated " << trace.config.years << " years, "
                << trace.corpus.publication_count() << " publications, "
                << trace.corpus.authors_in_corpus() << " authors\n";
    }
  });

  // fixture: the bundled deterministic synthetic corpus.
  auto* fixture = app.add_subcommand("fixture", "regenerate the bundled synthetic corpus");
  CommonFlags fixture_flags;
  std::uint64_t fixture_seed = 42;
  std::string fixture_out = "-";
  add_common(fixture, fixture_flags, /*with_input=*/false);
  fixture->add_option("--seed", fixture_seed, "fixture seed")->capture_default_str();
  fixture->add_option("--out", fixture_out, "output corpus path (- for stdout)")
      ->capture_default_str();
  fixture->callback([&] {
    centrum::Fixture fx = centrum::make_fixture(fixture_seed);
    with_output(fixture_out,
                [&](std::ostream& out) { centrum::dump_jsonl(fx.corpus, out); });
    manifest.add_output(fixture_out);
    if (!fixture_flags.quiet) {
      std::cerr << "fixture: " << fx.corpus.publication_count() << " publications, "
                << fx.corpus.min_year() << ".." << fx.corpus.max_year() << ", seed "
                << fixture_seed << '\n';
    }
  });

  try {
    app.parse(argc, argv);
    CLI::App* chosen = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    if (chosen) {
      manifest.subcommand = chosen->get_name();
      for (CommonFlags* flags :
           {&ingest_flags, &growth_flags, &snapshot_flags, &centrality_flags,
            &evolve_flags, &correlate_flags, &mean_split_flags, &simulate_flags,
            &fixture_flags}) {
        if (!flags->manifest_path.empty()) manifest.path = flags->manifest_path;
      }
      manifest.write();
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << '\n';
    return 2;
  } catch (const centrum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
