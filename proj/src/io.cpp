#include "centrum/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "centrum/errors.hpp"

namespace centrum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_year(std::string_view field, std::size_t line_no) {
  field = trim(field);
  int year = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), year);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": year '" +
                     std::string(field) + "' is not an integer");
  }
  return year;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Normalizes and de-duplicates one raw author list, preserving first
// occurrence order. Repeated names are a known defect of real exports, so
// they are collapsed with a warning instead of rejected.
std::vector<AuthorId> normalize_authors(const std::vector<std::string>& raw,
                                        const std::string& record_id,
                                        std::size_t line_no,
                                        std::vector<std::string>& warnings) {
  std::vector<AuthorId> authors;
  authors.reserve(raw.size());
  for (const std::string& name : raw) {
    AuthorId id = normalize_author(name, record_id);
    bool duplicate = false;
    for (const AuthorId& existing : authors) {
      if (existing == id) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) {
      warnings.push_back("line " + std::to_string(line_no) + " (id " + record_id +
                         "): duplicate author '" + id.str() + "' collapsed");
    } else {
      authors.push_back(std::move(id));
    }
  }
  return authors;
}

std::vector<Publication> parse_csv(std::istream& in, std::vector<std::string>& warnings) {
  std::vector<Publication> pubs;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!saw_header) {
      if (row != "id,year,authors") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'id,year,authors'");
      }
      saw_header = true;
      continue;
    }
    auto fields = split(row, ',');
    if (fields.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    Publication pub;
    pub.id = std::string(trim(fields[0]));
    if (pub.id.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty id");
    }
    pub.year = parse_year(fields[1], line_no);
    std::vector<std::string> raw_authors;
    for (std::string_view name : split(fields[2], '|')) {
      raw_authors.emplace_back(name);
    }
    pub.authors = normalize_authors(raw_authors, pub.id, line_no, warnings);
    pubs.push_back(std::move(pub));
  }
  if (!saw_header) {
    throw ParseError("empty CSV input: missing 'id,year,authors' header");
  }
  return pubs;
}

std::vector<Publication> parse_jsonl(std::istream& in, std::vector<std::string>& warnings) {
  std::vector<Publication> pubs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(row);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("year") ||
        !obj.contains("authors")) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected object with id, year, authors");
    }
    if (!obj["id"].is_string() || !obj["year"].is_number_integer() ||
        !obj["authors"].is_array()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": id must be a string, year an integer, authors an array");
    }
    Publication pub;
    pub.id = obj["id"].get<std::string>();
    if (pub.id.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty id");
    }
    pub.year = obj["year"].get<int>();
    std::vector<std::string> raw_authors;
    for (const auto& name : obj["authors"]) {
      if (!name.is_string()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": authors must be strings");
      }
      raw_authors.push_back(name.get<std::string>());
    }
    pub.authors = normalize_authors(raw_authors, pub.id, line_no, warnings);
    pubs.push_back(std::move(pub));
  }
  return pubs;
}

}  // namespace

ParseOutcome parse_publications(std::istream& source, InputFormat format) {
  ParseOutcome outcome;
  std::vector<Publication> pubs = format == InputFormat::csv
                                      ? parse_csv(source, outcome.warnings)
                                      : parse_jsonl(source, outcome.warnings);
  outcome.corpus = TemporalCorpus::from_publications(std::move(pubs));
  return outcome;
}

void dump_jsonl(const TemporalCorpus& corpus, std::ostream& out) {
  for (int year : corpus.years()) {
    for (const Publication& p : corpus.publications_in(year)) {
      nlohmann::ordered_json obj;
      obj["id"] = p.id;
      obj["year"] = p.year;
      auto names = nlohmann::ordered_json::array();
      for (const AuthorId& a : p.authors) names.push_back(a.str());
      obj["authors"] = std::move(names);
      out << obj.dump() << '\n';
    }
  }
}

std::string dump_jsonl(const TemporalCorpus& corpus) {
  std::ostringstream out;
  dump_jsonl(corpus, out);
  return out.str();
}

InputFormat infer_format(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return InputFormat::csv;
  }
  return InputFormat::jsonl;
}

}  // namespace centrum
