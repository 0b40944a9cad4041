#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "centrum/graph.hpp"

namespace centrum {

// The four ways a year's new link can relate to the previous year-end
// network: both endpoints new, one new, both old without a prior edge, or
// both old with one.
enum class LinkCategory : int {
  new_new = 0,
  new_old = 1,
  old_old_unconnected = 2,
  old_old_repeat = 3,
};

inline constexpr int kLinkCategoryCount = 4;
const char* link_category_name(LinkCategory c);

// One distinct pair that gained at least one collaboration in `year`.
// `increments` counts same-year repeats of that pair; the category is a
// pure function of the pair's status at the end of year - 1, so every
// increment of the pair shares it.
struct AttachmentEvent {
  int year = 0;
  AuthorId a;  // a < b
  AuthorId b;
  LinkCategory category = LinkCategory::new_new;
  int increments = 1;
};

struct LinkClassification {
  int year = 0;
  std::vector<AttachmentEvent> events;  // sorted by (a, b)
  // Pair increments per category; sums to total_increments.
  std::array<std::int64_t, kLinkCategoryCount> increment_totals{};
  std::int64_t total_increments = 0;
};

LinkClassification classify_links(const SnapshotSeries& series, int year);
LinkClassification classify_links(const TemporalCorpus& corpus, int year);

// Distinct-partner bookkeeping for one author over one year's events.
struct AuthorYearAttachment {
  int new_partners = 0;      // distinct partners that entered this year
  int old_partners = 0;      // distinct partners already in the network
  int distinct_links = 0;    // distinct pairs touched, repeats counted once
};

// Who attached to whom in `year`, judged against the end of year - 1.
struct AuthorAttachmentStats {
  int year = 0;
  // Keyed over authors present in the prior snapshot that gained >= 1 link.
  std::map<AuthorId, AuthorYearAttachment> old_authors;
  // Keyed over this year's entrants (all of them; every entrant has a link).
  std::map<AuthorId, AuthorYearAttachment> new_authors;
};

AuthorAttachmentStats author_attachments(const SnapshotSeries& series, int year);

// One row of the per-year author attachment table. Percentage bases differ
// by population: new-author columns use the year's entrant count, old-author
// columns the prior cumulative author count.
struct AuthorAttachmentRow {
  int year = 0;
  std::int64_t cum_authors = 0;  // through this year
  std::int64_t new_authors = 0;
  std::int64_t new_attached_to_new = 0;
  std::int64_t new_attached_to_old = 0;
  std::int64_t old_attached_to_new = 0;
  std::int64_t old_attached_to_old = 0;
  std::int64_t old_attached_to_any = 0;
};

AuthorAttachmentRow author_attachment_report(const SnapshotSeries& series, int year);
AuthorAttachmentRow author_attachment_report(const TemporalCorpus& corpus, int year);

// What happened to each author of Snapshot(year) in the following year.
struct AttachmentCounts {
  int new_author_count = 0;        // distinct entrants of year+1 attached
  int new_link_count = 0;          // distinct pairs gained in year+1
  int next_year_coauthor_count = 0;  // degree in Snapshot(year+1)
};

// Requires year and year + 1 both inside the corpus range.
std::map<AuthorId, AttachmentCounts> attachments_per_author(
    const SnapshotSeries& series, int year);
std::map<AuthorId, AttachmentCounts> attachments_per_author(
    const TemporalCorpus& corpus, int year);

// Per-year CSVs shaped like the attachment tables: one row per year of the
// corpus, percentages recomputed from the counts.
void write_author_table_csv(const SnapshotSeries& series, std::ostream& out);
void write_link_table_csv(const SnapshotSeries& series, std::ostream& out);

}  // namespace centrum
