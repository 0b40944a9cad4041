#include "centrum/evolution.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "centrum/format.hpp"

namespace centrum {

const char* link_category_name(LinkCategory c) {
  switch (c) {
    case LinkCategory::new_new: return "new_new";
    case LinkCategory::new_old: return "new_old";
    case LinkCategory::old_old_unconnected: return "old_old_unconnected";
    case LinkCategory::old_old_repeat: return "old_old_repeat";
  }
  return "?";
}

LinkClassification classify_links(const SnapshotSeries& series, int year) {
  const Snapshot& prior = series.prior(year);
  const YearDelta& delta = series.delta(year);

  LinkClassification result;
  result.year = year;
  result.total_increments = static_cast<std::int64_t>(delta.new_pair_increments.size());

  // Increments arrive sorted, so equal pairs are adjacent.
  std::size_t i = 0;
  while (i < delta.new_pair_increments.size()) {
    const auto& pair = delta.new_pair_increments[i];
    std::size_t j = i;
    while (j < delta.new_pair_increments.size() && delta.new_pair_increments[j] == pair) {
      ++j;
    }
    AttachmentEvent event;
    event.year = year;
    event.a = pair.first;
    event.b = pair.second;
    event.increments = static_cast<int>(j - i);
    const bool a_old = prior.has_node(pair.first);
    const bool b_old = prior.has_node(pair.second);
    if (!a_old && !b_old) {
      event.category = LinkCategory::new_new;
    } else if (a_old != b_old) {
      event.category = LinkCategory::new_old;
    } else if (prior.has_edge(pair.first, pair.second)) {
      event.category = LinkCategory::old_old_repeat;
    } else {
      event.category = LinkCategory::old_old_unconnected;
    }
    result.increment_totals[static_cast<int>(event.category)] += event.increments;
    result.events.push_back(std::move(event));
    i = j;
  }
  return result;
}

LinkClassification classify_links(const TemporalCorpus& corpus, int year) {
  return classify_links(SnapshotSeries(corpus), year);
}

AuthorAttachmentStats author_attachments(const SnapshotSeries& series, int year) {
  const Snapshot& prior = series.prior(year);
  LinkClassification classified = classify_links(series, year);

  AuthorAttachmentStats stats;
  stats.year = year;
  for (const AttachmentEvent& event : classified.events) {
    const bool a_old = prior.has_node(event.a);
    const bool b_old = prior.has_node(event.b);
    auto& a_stats = (a_old ? stats.old_authors : stats.new_authors)[event.a];
    auto& b_stats = (b_old ? stats.old_authors : stats.new_authors)[event.b];
    ++a_stats.distinct_links;
    ++b_stats.distinct_links;
    (b_old ? a_stats.old_partners : a_stats.new_partners) += 1;
    (a_old ? b_stats.old_partners : b_stats.new_partners) += 1;
  }
  return stats;
}

AuthorAttachmentRow author_attachment_report(const SnapshotSeries& series, int year) {
  AuthorAttachmentStats stats = author_attachments(series, year);

  AuthorAttachmentRow row;
  row.year = year;
  row.cum_authors = series.at(year).node_count();
  row.new_authors = static_cast<std::int64_t>(series.delta(year).new_authors.size());
  for (const auto& [author, counts] : stats.new_authors) {
    if (counts.new_partners > 0) ++row.new_attached_to_new;
    if (counts.old_partners > 0) ++row.new_attached_to_old;
  }
  for (const auto& [author, counts] : stats.old_authors) {
    if (counts.new_partners > 0) ++row.old_attached_to_new;
    if (counts.old_partners > 0) ++row.old_attached_to_old;
    ++row.old_attached_to_any;  // present in the map means >= 1 link
  }
  return row;
}

AuthorAttachmentRow author_attachment_report(const TemporalCorpus& corpus, int year) {
  return author_attachment_report(SnapshotSeries(corpus), year);
}

std::map<AuthorId, AttachmentCounts> attachments_per_author(
    const SnapshotSeries& series, int year) {
  const Snapshot& base = series.at(year);
  const Snapshot& next = series.at(year + 1);  // range-checks year + 1
  AuthorAttachmentStats stats = author_attachments(series, year + 1);

  std::map<AuthorId, AttachmentCounts> result;
  for (const AuthorId& author : base.nodes()) {
    AttachmentCounts counts;
    auto it = stats.old_authors.find(author);
    if (it != stats.old_authors.end()) {
      counts.new_author_count = it->second.new_partners;
      counts.new_link_count = it->second.distinct_links;
    }
    counts.next_year_coauthor_count = next.degree(*next.index_of(author));
    result.emplace(author, counts);
  }
  return result;
}

std::map<AuthorId, AttachmentCounts> attachments_per_author(
    const TemporalCorpus& corpus, int year) {
  return attachments_per_author(SnapshotSeries(corpus), year);
}

void write_author_table_csv(const SnapshotSeries& series, std::ostream& out) {
  out << "year,cum_authors,new_authors,"
         "new_attached_to_new,new_attached_to_new_pct,"
         "new_attached_to_old,new_attached_to_old_pct,"
         "old_attached_to_new,old_attached_to_new_pct,"
         "old_attached_to_old,old_attached_to_old_pct,"
         "old_attached_to_any,old_attached_to_any_pct\n";
  for (int year = series.min_year(); year <= series.max_year(); ++year) {
    AuthorAttachmentRow r = author_attachment_report(series, year);
    const std::int64_t prior_authors = r.cum_authors - r.new_authors;
    out << r.year << ',' << r.cum_authors << ',' << r.new_authors << ','
        << r.new_attached_to_new << ',' << format_pct(r.new_attached_to_new, r.new_authors)
        << ',' << r.new_attached_to_old << ','
        << format_pct(r.new_attached_to_old, r.new_authors) << ','
        << r.old_attached_to_new << ',' << format_pct(r.old_attached_to_new, prior_authors)
        << ',' << r.old_attached_to_old << ','
        << format_pct(r.old_attached_to_old, prior_authors) << ','
        << r.old_attached_to_any << ',' << format_pct(r.old_attached_to_any, prior_authors)
        << '\n';
  }
}

void write_link_table_csv(const SnapshotSeries& series, std::ostream& out) {
  out << "year,cum_links,new_links,"
         "new_new,new_new_pct,new_old,new_old_pct,"
         "old_old_unconnected,old_old_unconnected_pct,"
         "old_old_repeat,old_old_repeat_pct\n";
  for (int year = series.min_year(); year <= series.max_year(); ++year) {
    LinkClassification c = classify_links(series, year);
    out << year << ',' << series.at(year).weighted_link_sum() << ','
        << c.total_increments;
    for (int cat = 0; cat < kLinkCategoryCount; ++cat) {
      out << ',' << c.increment_totals[static_cast<std::size_t>(cat)] << ','
          << format_pct(c.increment_totals[static_cast<std::size_t>(cat)],
                        c.total_increments);
    }
    out << '\n';
  }
}

}  // namespace centrum
