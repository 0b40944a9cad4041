#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace centrum {

// Canonical author identity: lowercase, whitespace-collapsed, trimmed.
// Matching is exact on the canonical string; the input is assumed to be
// pre-disambiguated.
class AuthorId {
 public:
  AuthorId() = default;

  const std::string& str() const { return name_; }
  bool empty() const { return name_.empty(); }

  auto operator<=>(const AuthorId&) const = default;

 private:
  friend AuthorId normalize_author(std::string_view raw);
  friend AuthorId normalize_author(std::string_view raw, std::string_view record);
  explicit AuthorId(std::string canonical) : name_(std::move(canonical)) {}

  std::string name_;
};

// Canonicalizes a raw author name. Throws ValidationError on input that is
// empty after stripping whitespace; `record` names the offending record in
// the message. Idempotent: normalizing a canonical name is a no-op.
AuthorId normalize_author(std::string_view raw, std::string_view record);
AuthorId normalize_author(std::string_view raw);

struct Publication {
  std::string id;
  int year = 0;
  std::vector<AuthorId> authors;  // ordered, no duplicates

  bool multi_author() const { return authors.size() >= 2; }
  bool operator==(const Publication&) const = default;
};

// Accepted calendar-year window for any publication.
inline constexpr int kMinValidYear = 1000;
inline constexpr int kMaxValidYear = 3000;

// All publications indexed by year. Immutable after construction and safe
// to share across threads.
class TemporalCorpus {
 public:
  // Validates ids (non-empty, unique), years, and author lists
  // (non-empty, duplicate-free). Throws ValidationError on violation.
  static TemporalCorpus from_publications(std::vector<Publication> pubs);

  int min_year() const { return min_year_; }
  int max_year() const { return max_year_; }
  bool contains_year(int year) const {
    return !years_.empty() && year >= min_year_ && year <= max_year_;
  }

  // Ascending years with at least one publication.
  const std::vector<int>& years() const { return years_; }

  // Publications of one year sorted by id; empty for years without records.
  const std::vector<Publication>& publications_in(int year) const;

  std::int64_t publication_count() const { return publication_count_; }
  bool empty() const { return years_.empty(); }

  // Distinct authors over all publications, single-authored ones included.
  std::int64_t authors_in_corpus() const;
  // Distinct authors over multi-authored publications only; these are the
  // authors that can appear in the co-authorship network.
  std::int64_t authors_in_network() const;

  bool operator==(const TemporalCorpus&) const = default;

 private:
  std::vector<int> years_;
  std::vector<std::vector<Publication>> by_year_;  // aligned with years_
  int min_year_ = 0;
  int max_year_ = 0;
  std::int64_t publication_count_ = 0;
};

}  // namespace centrum

template <>
struct std::hash<centrum::AuthorId> {
  std::size_t operator()(const centrum::AuthorId& a) const noexcept {
    return std::hash<std::string>{}(a.str());
  }
};
