#include <doctest.h>

#include <random>

#include "halfrep/errors.hpp"
#include "halfrep/output.hpp"

using namespace halfrep;

TEST_CASE("records serialize integers as decimal strings") {
  OutputRecord r("representation");
  r.add("a", Integer(3)).add("b", Integer(5)).add("k", Integer(4)).add("delta", 1L);
  r.add("x", Integer(1)).add("y", Integer(0));
  CHECK(r.to_json_line() ==
        R"({"kind":"representation","a":"3","b":"5","k":"4","delta":1,"x":"1","y":"0"})");
  CHECK(r.integer("k") == 4);
  CHECK(r.integer("delta") == 1);
  CHECK_THROWS_AS(r.integer("missing"), DomainError);
}

TEST_CASE("decimal-string fields round-trip for values up to 200 digits") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> length(1, 200);
  for (int iter = 0; iter < 500; ++iter) {
    std::string s(static_cast<std::size_t>(length(rng)), '0');
    for (auto& c : s) c = static_cast<char>('0' + digit(rng));
    Integer v(s, 10);
    if (iter % 2) v = -v;

    OutputRecord r("probe");
    r.add("value", v).add("label", std::string("x")).add("small", static_cast<long>(iter));
    const std::string line = r.to_json_line();
    const OutputRecord back = OutputRecord::parse_json_line(line);
    REQUIRE(back.kind() == "probe");
    REQUIRE(back.integer("value") == v);
    REQUIRE(back.integer("small") == iter);
    REQUIRE(std::get<std::string>(*back.find("label")) == "x");
    REQUIRE(back.to_json_line() == line);
  }
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(OutputRecord::parse_json_line("{"), DomainError);
  CHECK_THROWS_AS(OutputRecord::parse_json_line(R"({"a":"1"})"), DomainError);
  CHECK_THROWS_AS(OutputRecord::parse_json_line(R"({"kind":"k","v":1.5})"), DomainError);
  CHECK_THROWS_AS(OutputRecord::parse_json_line("[1,2]"), DomainError);
}

TEST_CASE("formats and csv lines") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("human") == Format::human);
  CHECK_FALSE(parse_format("xml").has_value());
  CHECK(csv_line({"1", "2", "3"}) == "1,2,3");
  CHECK(csv_line({}).empty());
}
