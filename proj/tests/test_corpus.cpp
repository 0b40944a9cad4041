#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "centrum/corpus.hpp"
#include "centrum/errors.hpp"
#include "centrum/fixture.hpp"
#include "centrum/io.hpp"
#include "helpers.hpp"

using namespace centrum;

TEST_CASE("author normalization canonicalizes case and whitespace") {
  CHECK(normalize_author("  Freeman,  L. C. ").str() == "freeman, l. c.");
  CHECK(normalize_author("ABBASI, A.").str() == "abbasi, a.");
  CHECK(normalize_author("a\tb\nc").str() == "a b c");
}

TEST_CASE("author normalization is idempotent") {
  AuthorId once = normalize_author("  Freeman,  L. C. ");
  CHECK(normalize_author(once.str()) == once);
  CHECK(normalize_author("abbasi, a.").str() == "abbasi, a.");
}

TEST_CASE("empty author names are rejected with the record named") {
  CHECK_THROWS_AS(normalize_author("   "), ValidationError);
  try {
    normalize_author(" \t ", "p17");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("p17") != std::string::npos);
  }
}

TEST_CASE("corpus validation rejects bad publications") {
  CHECK_THROWS_AS(helpers::corpus({helpers::pub("x", 1999, {"a"}),
                                   helpers::pub("x", 2000, {"b"})}),
                  ValidationError);
  CHECK_THROWS_AS(helpers::corpus({helpers::pub("x", 999, {"a"})}), ValidationError);
  CHECK_THROWS_AS(helpers::corpus({helpers::pub("x", 3001, {"a"})}), ValidationError);

  Publication no_authors;
  no_authors.id = "x";
  no_authors.year = 2000;
  CHECK_THROWS_AS(helpers::corpus({no_authors}), ValidationError);

  Publication dup_author = helpers::pub("x", 2000, {"a", "b"});
  dup_author.authors.push_back(helpers::author("a"));
  CHECK_THROWS_AS(helpers::corpus({dup_author}), ValidationError);
}

TEST_CASE("corpus groups publications by year") {
  auto corpus = helpers::corpus({
      helpers::pub("p3", 2000, {"c", "d"}),
      helpers::pub("p1", 1999, {"a", "b"}),
      helpers::pub("p2", 1999, {"b", "c"}),
  });
  CHECK(corpus.min_year() == 1999);
  CHECK(corpus.max_year() == 2000);
  CHECK(corpus.years() == std::vector<int>{1999, 2000});
  CHECK(corpus.publications_in(1999).size() == 2);
  CHECK(corpus.publications_in(2000).size() == 1);
  CHECK(corpus.publications_in(1998).empty());
  CHECK(corpus.publication_count() == 3);
  // sorted by id within the year
  CHECK(corpus.publications_in(1999)[0].id == "p1");
  CHECK(corpus.publications_in(1999)[1].id == "p2");
}

TEST_CASE("CSV parsing: year buckets, header, |-separated authors") {
  std::istringstream in(
      "id,year,authors\n"
      "p1,1999,Smith, J.\n");
  // 4 comma fields in the row above: malformed
  CHECK_THROWS_AS(parse_publications(in, InputFormat::csv), ParseError);

  std::istringstream ok(
      "id,year,authors\n"
      "p1,1999,Smith J.|Jones K.\n"
      "p2,1999,Smith J.\n"
      "p3,2000,Lee H.|Kim S.\n");
  ParseOutcome outcome = parse_publications(ok, InputFormat::csv);
  CHECK(outcome.warnings.empty());
  CHECK(outcome.corpus.publications_in(1999).size() == 2);
  CHECK(outcome.corpus.publications_in(2000).size() == 1);
  CHECK(outcome.corpus.publications_in(1999)[0].authors[0].str() == "smith j.");
}

TEST_CASE("CSV parsing rejects a missing or wrong header") {
  std::istringstream missing("p1,1999,A|B\n");
  CHECK_THROWS_AS(parse_publications(missing, InputFormat::csv), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_publications(empty, InputFormat::csv), ParseError);
}

TEST_CASE("parse errors carry the line number") {
  std::istringstream bad_year(
      "id,year,authors\n"
      "p1,199x,A|B\n");
  try {
    parse_publications(bad_year, InputFormat::csv);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("duplicate author within a record collapses with a warning") {
  std::istringstream in(
      "id,year,authors\n"
      "p1,1999,A|B|A\n");
  ParseOutcome outcome = parse_publications(in, InputFormat::csv);
  REQUIRE(outcome.warnings.size() == 1);
  CHECK(outcome.warnings[0].find("duplicate author 'a'") != std::string::npos);
  const auto& authors = outcome.corpus.publications_in(1999)[0].authors;
  REQUIRE(authors.size() == 2);
  CHECK(authors[0].str() == "a");
  CHECK(authors[1].str() == "b");
}

TEST_CASE("JSONL parsing skips blank and comment lines") {
  std::istringstream in(
      "# generated header, ignored\n"
      "\n"
      "{\"id\": \"p1\", \"year\": 1999, \"authors\": [\"A\", \"B\"]}\n"
      "   \n"
      "{\"id\": \"p2\", \"year\": 2000, \"authors\": [\"A, X.\"]}\n");
  ParseOutcome outcome = parse_publications(in, InputFormat::jsonl);
  CHECK(outcome.corpus.publication_count() == 2);
  CHECK(outcome.corpus.publications_in(2000)[0].authors[0].str() == "a, x.");
}

TEST_CASE("JSONL parsing rejects malformed rows with line numbers") {
  std::istringstream bad_json("{\"id\": \"p1\",\n");
  CHECK_THROWS_AS(parse_publications(bad_json, InputFormat::jsonl), ParseError);

  std::istringstream bad_year("{\"id\": \"p1\", \"year\": \"1999\", \"authors\": [\"A\"]}\n");
  CHECK_THROWS_AS(parse_publications(bad_year, InputFormat::jsonl), ParseError);

  std::istringstream missing_field("{\"id\": \"p1\", \"year\": 1999}\n");
  try {
    parse_publications(missing_field, InputFormat::jsonl);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("year window is enforced") {
  std::istringstream in("{\"id\": \"p1\", \"year\": 999, \"authors\": [\"A\"]}\n");
  CHECK_THROWS_AS(parse_publications(in, InputFormat::jsonl), ValidationError);
}

TEST_CASE("corpus round-trips through the JSONL dump") {
  auto corpus = helpers::corpus({
      helpers::pub("p1", 1999, {"Smith, J.", "Jones, K."}),
      helpers::pub("p2", 2000, {"Lee, H."}),
      helpers::pub("p0", 1999, {"Quote \" name", "comma, name"}),
  });
  std::string dumped = dump_jsonl(corpus);
  std::istringstream in(dumped);
  ParseOutcome reparsed = parse_publications(in, InputFormat::jsonl);
  CHECK(reparsed.corpus == corpus);
  CHECK(dump_jsonl(reparsed.corpus) == dumped);
}

TEST_CASE("dump is ordered by (year, id)") {
  auto corpus = helpers::corpus({
      helpers::pub("b", 2000, {"x", "y"}),
      helpers::pub("a", 2000, {"x", "z"}),
      helpers::pub("z", 1999, {"x", "w"}),
  });
  std::string dumped = dump_jsonl(corpus);
  std::size_t pos_z = dumped.find("\"z\"");
  std::size_t pos_a = dumped.find("\"a\"");
  std::size_t pos_b = dumped.find("\"b\"");
  CHECK(pos_z < pos_a);
  CHECK(pos_a < pos_b);
}

TEST_CASE("parsing is order-insensitive") {
  std::vector<std::string> rows = {
      "{\"id\": \"p1\", \"year\": 1999, \"authors\": [\"a\", \"b\"]}",
      "{\"id\": \"p2\", \"year\": 2001, \"authors\": [\"c\"]}",
      "{\"id\": \"p3\", \"year\": 2000, \"authors\": [\"a\", \"c\"]}",
      "{\"id\": \"p4\", \"year\": 1999, \"authors\": [\"d\", \"e\", \"f\"]}",
  };
  std::string joined;
  for (const auto& r : rows) joined += r + "\n";
  std::istringstream first(joined);
  TemporalCorpus reference = parse_publications(first, InputFormat::jsonl).corpus;

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::string shuffled;
    for (const auto& r : rows) shuffled += r + "\n";
    std::istringstream in(shuffled);
    CHECK(parse_publications(in, InputFormat::jsonl).corpus == reference);
  }
}

TEST_CASE("corpus and network author counts differ on single-authored work") {
  auto corpus = helpers::corpus({
      helpers::pub("p1", 1999, {"a", "b"}),
      helpers::pub("p2", 1999, {"solo"}),
      helpers::pub("p3", 2000, {"a"}),
  });
  CHECK(corpus.authors_in_corpus() == 3);
  CHECK(corpus.authors_in_network() == 2);
}

TEST_CASE("format inference picks CSV only for .csv paths") {
  CHECK(infer_format("corpus.csv") == InputFormat::csv);
  CHECK(infer_format("corpus.jsonl") == InputFormat::jsonl);
  CHECK(infer_format("-") == InputFormat::jsonl);
  CHECK(infer_format("weird.csv.gz") == InputFormat::jsonl);
}

TEST_CASE("bundled fixture has the documented shape") {
  Fixture fx = make_fixture();
  CHECK(fx.corpus.publication_count() == 200);
  CHECK(fx.corpus.years().size() == 10);
  CHECK(fx.corpus.min_year() == 2000);
  CHECK(fx.corpus.max_year() == 2009);
  for (int year : fx.corpus.years()) {
    CHECK(fx.truth.publications_by_year.at(year) ==
          static_cast<int>(fx.corpus.publications_in(year).size()));
  }
  // regenerating with the same seed gives the same corpus
  CHECK(make_fixture().corpus == fx.corpus);
  CHECK(make_fixture(43).corpus != fx.corpus);
}

TEST_CASE("the committed fixture file matches the generator output") {
  std::ifstream in(std::string(CENTRUM_DATA_DIR) + "/synthetic_200.jsonl",
                   std::ios::binary);
  REQUIRE(in.good());
  ParseOutcome parsed = parse_publications(in, InputFormat::jsonl);
  CHECK(parsed.warnings.empty());
  CHECK(parsed.corpus == make_fixture(42).corpus);
}
