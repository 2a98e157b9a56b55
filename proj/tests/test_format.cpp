#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuzzysched/format.hpp"

using namespace fuzzysched;

TEST_CASE("format_fixed rounds half up at two decimals") {
  CHECK(format_fixed(0.0) == "0.00");
  CHECK(format_fixed(11.2) == "11.20");
  CHECK(format_fixed(22.0) == "22.00");
  CHECK(format_fixed(1.005) == "1.01");
  CHECK(format_fixed(2.675) == "2.68");
  CHECK(format_fixed(1.125) == "1.13");
  CHECK(format_fixed(10.875) == "10.88");
  CHECK(format_fixed(3.224) == "3.22");
  CHECK(format_fixed(3.226) == "3.23");
  CHECK(format_fixed(245.0 / 76.0) == "3.22");
  CHECK(format_fixed(55.0 / 6.0) == "9.17");
}

TEST_CASE("format_fixed handles signs and carries") {
  CHECK(format_fixed(-1.125) == "-1.13");
  CHECK(format_fixed(-0.0) == "0.00");
  CHECK(format_fixed(-0.0001) == "0.00");
  CHECK(format_fixed(0.995) == "1.00");
  CHECK(format_fixed(9.995) == "10.00");
  CHECK(format_fixed(99.999) == "100.00");
}

TEST_CASE("format_fixed honours the decimals argument") {
  CHECK(format_fixed(3.14159, 4) == "3.1416");
  CHECK(format_fixed(5.0, 0) == "5");
  CHECK(format_fixed(2.5, 0) == "3");
  CHECK(format_fixed(0.25, 1) == "0.3");
}

TEST_CASE("format_time drops the fraction for integral instants") {
  CHECK(format_time(0.0) == "0");
  CHECK(format_time(3.0) == "3");
  CHECK(format_time(50.0) == "50");
  CHECK(format_time(2.5) == "2.5");
  CHECK(format_time(0.25) == "0.25");
  CHECK(format_time(11.2) == "11.2");
}

TEST_CASE("format_number round-trips cleanly") {
  CHECK(format_number(5.961) == "5.961");
  CHECK(format_number(3.0) == "3");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(7.66) == "7.66");
  CHECK(format_number(-2.0) == "-2");
}
