#include "centrum/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "centrum/errors.hpp"

namespace centrum {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

}  // namespace

AuthorId normalize_author(std::string_view raw, std::string_view record) {
  std::string canonical;
  canonical.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (is_space(c)) {
      if (!canonical.empty() && canonical.back() != ' ') canonical.push_back(' ');
    } else {
      canonical.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  while (!canonical.empty() && canonical.back() == ' ') canonical.pop_back();
  if (canonical.empty()) {
    std::string where = record.empty() ? std::string("input")
                                       : "record " + std::string(record);
    throw ValidationError("empty author name in " + where);
  }
  return AuthorId(std::move(canonical));
}

AuthorId normalize_author(std::string_view raw) { return normalize_author(raw, {}); }

TemporalCorpus TemporalCorpus::from_publications(std::vector<Publication> pubs) {
  TemporalCorpus corpus;
  if (pubs.empty()) return corpus;

  std::unordered_set<std::string> seen_ids;
  seen_ids.reserve(pubs.size());
  for (const Publication& p : pubs) {
    if (p.id.empty()) {
      throw ValidationError("publication with empty id");
    }
    if (!seen_ids.insert(p.id).second) {
      throw ValidationError("duplicate publication id '" + p.id + "'");
    }
    if (p.year < kMinValidYear || p.year > kMaxValidYear) {
      throw ValidationError("publication '" + p.id + "' has year " +
                            std::to_string(p.year) + " outside [" +
                            std::to_string(kMinValidYear) + ", " +
                            std::to_string(kMaxValidYear) + "]");
    }
    if (p.authors.empty()) {
      throw ValidationError("publication '" + p.id + "' has no authors");
    }
    std::unordered_set<std::string> names;
    for (const AuthorId& a : p.authors) {
      if (!names.insert(a.str()).second) {
        throw ValidationError("publication '" + p.id + "' lists author '" +
                              a.str() + "' twice");
      }
    }
  }

  std::sort(pubs.begin(), pubs.end(), [](const Publication& a, const Publication& b) {
    return a.year != b.year ? a.year < b.year : a.id < b.id;
  });

  for (Publication& p : pubs) {
    if (corpus.years_.empty() || corpus.years_.back() != p.year) {
      corpus.years_.push_back(p.year);
      corpus.by_year_.emplace_back();
    }
    corpus.by_year_.back().push_back(std::move(p));
  }
  corpus.min_year_ = corpus.years_.front();
  corpus.max_year_ = corpus.years_.back();
  corpus.publication_count_ = static_cast<std::int64_t>(pubs.size());
  return corpus;
}

const std::vector<Publication>& TemporalCorpus::publications_in(int year) const {
  static const std::vector<Publication> kEmpty;
  auto it = std::lower_bound(years_.begin(), years_.end(), year);
  if (it == years_.end() || *it != year) return kEmpty;
  return by_year_[static_cast<std::size_t>(it - years_.begin())];
}

std::int64_t TemporalCorpus::authors_in_corpus() const {
  std::set<AuthorId> all;
  for (const auto& bucket : by_year_) {
    for (const Publication& p : bucket) {
      all.insert(p.authors.begin(), p.authors.end());
    }
  }
  return static_cast<std::int64_t>(all.size());
}

std::int64_t TemporalCorpus::authors_in_network() const {
  std::set<AuthorId> networked;
  for (const auto& bucket : by_year_) {
    for (const Publication& p : bucket) {
      if (!p.multi_author()) continue;
      networked.insert(p.authors.begin(), p.authors.end());
    }
  }
  return static_cast<std::int64_t>(networked.size());
}

}  // namespace centrum
