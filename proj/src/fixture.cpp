#include "centrum/fixture.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

#include "centrum/simulate.hpp"

namespace centrum {

namespace {

constexpr int kFixtureYears = 10;
constexpr int kFixtureStartYear = 2000;
constexpr int kFixturePubsPerYear = 20;
// Publication sizes 1..4.
const std::vector<double> kSizeWeights = {0.15, 0.45, 0.25, 0.15};
constexpr double kRepeatShare = 0.25;   // reuse a recent pair outright
constexpr double kNewSlotShare = 0.4;   // fresh entrant per remaining slot
constexpr double kFreshSoloShare = 0.5;
constexpr std::size_t kAuthorWindow = 60;
constexpr std::size_t kPairWindow = 150;

AuthorId fixture_author(const char* prefix, int serial) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%s-%04d", prefix, serial);
  return normalize_author(buf);
}

}  // namespace

Fixture make_fixture(std::uint64_t seed) {
  SimRng rng(seed);
  std::vector<Publication> pubs;
  pubs.reserve(kFixtureYears * kFixturePubsPerYear);

  std::set<AuthorId> corpus_authors;
  std::set<AuthorId> networked;
  std::vector<AuthorId> recent_authors;                  // recency window
  std::vector<std::pair<AuthorId, AuthorId>> recent_pairs;
  int next_author = 1;
  int next_solo = 1;
  int next_pub = 1;

  FixtureTruth truth;

  auto fresh_author = [&] { return fixture_author("author", next_author++); };

  auto push_recent = [&](const AuthorId& a) {
    recent_authors.push_back(a);
    if (recent_authors.size() > kAuthorWindow)
      recent_authors.erase(recent_authors.begin());
  };

  for (int step = 0; step < kFixtureYears; ++step) {
    const int year = kFixtureStartYear + step;
    truth.new_network_authors_by_year[year] = 0;

    for (int p = 0; p < kFixturePubsPerYear; ++p) {
      const int size = 1 + static_cast<int>(rng.weighted_index(kSizeWeights, 1.0));
      Publication pub;
      char id[16];
      std::snprintf(id, sizeof(id), "p%04d", next_pub++);
      pub.id = id;
      pub.year = year;

      if (size == 1) {
        if (recent_authors.empty() || rng.uniform01() < kFreshSoloShare) {
          pub.authors.push_back(fixture_author("solo", next_solo++));
        } else {
          std::size_t i = static_cast<std::size_t>(
              rng.uniform01() * static_cast<double>(recent_authors.size()));
          i = std::min(i, recent_authors.size() - 1);
          pub.authors.push_back(recent_authors[i]);
        }
      } else {
        std::vector<AuthorId> picked;
        if (!recent_pairs.empty() && rng.uniform01() < kRepeatShare) {
          std::size_t i = static_cast<std::size_t>(
              rng.uniform01() * static_cast<double>(recent_pairs.size()));
          i = std::min(i, recent_pairs.size() - 1);
          picked.push_back(recent_pairs[i].first);
          picked.push_back(recent_pairs[i].second);
        }
        while (static_cast<int>(picked.size()) < size) {
          AuthorId candidate;
          if (recent_authors.empty() || rng.uniform01() < kNewSlotShare) {
            candidate = fresh_author();
          } else {
            std::size_t i = static_cast<std::size_t>(
                rng.uniform01() * static_cast<double>(recent_authors.size()));
            i = std::min(i, recent_authors.size() - 1);
            candidate = recent_authors[i];
          }
          if (std::find(picked.begin(), picked.end(), candidate) != picked.end())
            candidate = fresh_author();  // window collision, take an entrant
          picked.push_back(candidate);
        }
        pub.authors = picked;

        for (const AuthorId& a : pub.authors) {
          if (networked.insert(a).second) {
            ++truth.new_network_authors_by_year[year];
            push_recent(a);
          }
        }
        for (std::size_t i = 0; i < pub.authors.size(); ++i) {
          for (std::size_t j = i + 1; j < pub.authors.size(); ++j) {
            const AuthorId& a = pub.authors[i];
            const AuthorId& b = pub.authors[j];
            recent_pairs.emplace_back(std::min(a, b), std::max(a, b));
            if (recent_pairs.size() > kPairWindow)
              recent_pairs.erase(recent_pairs.begin());
          }
        }
      }

      for (const AuthorId& a : pub.authors) corpus_authors.insert(a);
      ++truth.publications_by_year[year];
      pubs.push_back(std::move(pub));
    }
  }

  truth.corpus_authors = static_cast<std::int64_t>(corpus_authors.size());
  truth.network_authors = static_cast<std::int64_t>(networked.size());

  Fixture fx;
  fx.truth = std::move(truth);
  fx.corpus = TemporalCorpus::from_publications(std::move(pubs));
  return fx;
}

}  // namespace centrum
