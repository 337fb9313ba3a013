#include <doctest.h>

#include "indcyc/count_int.hpp"

using namespace indcyc;

TEST_CASE("checked arithmetic stays exact and throws past 128 bits") {
  const Count big = checked_pow(2, 100);
  CHECK(to_string(big) == "1267650600228229401496703205376");
  CHECK(parse_count(to_string(big)) == big);
  CHECK_THROWS_AS(checked_pow(2, 128), CountOverflow);
  CHECK_THROWS_AS(checked_mul(big, big), CountOverflow);
  CHECK_THROWS_AS(checked_add(~Count(0), 1), CountOverflow);
  CHECK(checked_add(3, 4) == 7);
  CHECK(to_string(0) == "0");
}

TEST_CASE("json encoding uses numbers when they fit in 64 bits") {
  CHECK(count_to_json(3130).is_number_unsigned());
  const Count big = checked_pow(10, 30);
  const auto j = count_to_json(big);
  CHECK(j.is_string());
  CHECK(count_from_json(j) == big);
  CHECK(count_from_json(count_to_json(42)) == 42);
}

TEST_CASE("parse_count rejects junk") {
  CHECK_THROWS(parse_count(""));
  CHECK_THROWS(parse_count("12a"));
  CHECK_THROWS(parse_count("-1"));
}
