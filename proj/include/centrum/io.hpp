#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "centrum/corpus.hpp"

namespace centrum {

enum class InputFormat { csv, jsonl };

struct ParseOutcome {
  TemporalCorpus corpus;
  // Non-fatal defects that were repaired (currently: duplicate authors
  // within one record, collapsed to one occurrence).
  std::vector<std::string> warnings;
};

// CSV input: header `id,year,authors`, authors `|`-separated. Commas inside
// names are not supported here; use JSONL for those.
// JSONL input: one {"id", "year", "authors"} object per line. Blank lines
// and lines starting with '#' (simulator trace headers) are skipped.
//
// Throws ParseError (with line number) on malformed rows and
// ValidationError on semantic violations.
ParseOutcome parse_publications(std::istream& source, InputFormat format);

// Canonical corpus dump: one JSONL object per publication, ascending
// (year, id). Re-parsing a dump yields an equal corpus.
void dump_jsonl(const TemporalCorpus& corpus, std::ostream& out);
std::string dump_jsonl(const TemporalCorpus& corpus);

// Picks CSV for paths ending in ".csv", JSONL otherwise.
InputFormat infer_format(const std::string& path);

}  // namespace centrum
