#include "idbg/escape.hpp"

#include <doctest.h>

#include "idbg/errors.hpp"
#include "support/generators.hpp"

using namespace idbg;

TEST_CASE("escape_field rewrites tab, newline and backslash") {
  CHECK(escape_field("a\tb") == "a\\tb");
  CHECK(escape_field("a\nb") == "a\\nb");
  CHECK(escape_field("a\\b") == "a\\\\b");
  CHECK(escape_field("plain text") == "plain text");
}

TEST_CASE("escape_spaced_field additionally rewrites spaces") {
  CHECK(escape_spaced_field("a b") == "a\\sb");
  CHECK(escape_spaced_field("a\tb c") == "a\\tb\\sc");
}

TEST_CASE("unescape_field rejects malformed escapes") {
  CHECK_THROWS_AS(unescape_field("bad\\"), ParseError);
  CHECK_THROWS_AS(unescape_field("bad\\x"), ParseError);
  CHECK(unescape_field("a\\sb") == "a b");
}

TEST_CASE("escape round-trips arbitrary text") {
  testsupport::Rng rng(20210);
  for (int i = 0; i < 500; ++i) {
    std::string raw = testsupport::random_text(rng, 0, 40);
    CAPTURE(raw);
    CHECK(unescape_field(escape_field(raw)) == raw);
    std::string spaced = escape_spaced_field(raw);
    CHECK(unescape_field(spaced) == raw);
    CHECK(spaced.find(' ') == std::string::npos);
    CHECK(spaced.find('\t') == std::string::npos);
    CHECK(spaced.find('\n') == std::string::npos);
  }
}

TEST_CASE("split_lines drops a single trailing newline only") {
  CHECK(split_lines("").empty());
  CHECK(split_lines("\n").empty());
  CHECK(split_lines("a\nb\n").size() == 2);
  CHECK(split_lines("a\nb").size() == 2);
  CHECK(split_lines("a\n\nb\n").size() == 3);
}

TEST_CASE("split_fields preserves empty fields") {
  auto fields = split_fields("a\t\tb", '\t');
  REQUIRE(fields.size() == 3);
  CHECK(fields[1].empty());
}
