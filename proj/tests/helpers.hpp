#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "centrum/corpus.hpp"
#include "centrum/graph.hpp"

namespace helpers {

inline centrum::Publication pub(std::string id, int year,
                                std::initializer_list<const char*> names) {
  centrum::Publication p;
  p.id = std::move(id);
  p.year = year;
  for (const char* name : names) p.authors.push_back(centrum::normalize_author(name));
  return p;
}

inline centrum::TemporalCorpus corpus(std::vector<centrum::Publication> pubs) {
  return centrum::TemporalCorpus::from_publications(std::move(pubs));
}

inline centrum::AuthorId author(const char* name) {
  return centrum::normalize_author(name);
}

}  // namespace helpers
