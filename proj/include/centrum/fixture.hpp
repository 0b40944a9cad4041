#pragma once

#include <cstdint>
#include <map>

#include "centrum/corpus.hpp"

namespace centrum {

// Counts the generator tracked on its own while composing the corpus,
// kept independent of the analysis code so reports can be checked against
// a second bookkeeping path.
struct FixtureTruth {
  std::map<int, int> publications_by_year;
  // Authors whose first multi-authored publication falls in that year.
  std::map<int, int> new_network_authors_by_year;
  std::int64_t corpus_authors = 0;
  std::int64_t network_authors = 0;
};

struct Fixture {
  TemporalCorpus corpus;
  FixtureTruth truth;
};

// Deterministic synthetic corpus: 200 publications over 2000..2009,
// 20 per year, sizes 1..4 with a realistic single-author share, repeat
// collaborations drawn from a recency window so every attachment category
// occurs. Same seed, same corpus.
Fixture make_fixture(std::uint64_t seed = 42);

}  // namespace centrum
