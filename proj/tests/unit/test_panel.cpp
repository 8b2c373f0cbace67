#include <doctest.h>

#include <cmath>
#include <sstream>

#include "iat/econometrics/panel.hpp"
#include "iat/error.hpp"
#include "unit/util.hpp"

using namespace iat::econometrics;

namespace {

ExpectationPanel parse(const std::string& text) {
  std::istringstream in(text);
  return parse_panel_csv(in, "t.csv");
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const iat::Error& e) {
    CHECK(e.code() == iat::ErrorCode::Parse);
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("monthly CPI panel") {
  const auto p = parse(
      "\xEF\xBB\xBF" "date,expected_inflation_1y,cpi_index\n"
      "2000-01,3.2,100\n"
      "2000-02,NA,100.5\n"
      "2000-03,3.0,\n"
      "2000-04,2.8,101.2\n");
  CHECK(p.frequency == Frequency::Monthly);
  CHECK(p.size() == 4);
  REQUIRE(p.cpi_index.has_value());
  CHECK(std::isnan(p.expected_inflation_1y[1]));
  CHECK(std::isnan((*p.cpi_index)[2]));
  CHECK_FALSE(p.qoq_inflation.has_value());
}

TEST_CASE("quarterly inflation panel") {
  const auto p = parse("date,expected_inflation_1y,qoq_inflation\n1999-Q4,2,0.5\n2000-Q1,2.4,0.6\n");
  CHECK(p.frequency == Frequency::Quarterly);
  CHECK((*p.qoq_inflation)[1] == 0.6);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(has(parse_error("date,foo,cpi_index\n2000-01,1,2\n"), "t.csv:1:"));
  CHECK(parse_error("date,expected_inflation_1y,cpi_index\n2000-01,1,2\n2000-03,1,2\n") ==
        "t.csv:3: gap in dates before 2000-03");
  CHECK(has(parse_error("date,expected_inflation_1y,cpi_index\n2000-02,1,2\n2000-01,1,2\n"), "t.csv:3: dates must be strictly increasing"));
  CHECK(has(parse_error("date,expected_inflation_1y,cpi_index\n2000-01,x,2\n"), "t.csv:2: not a number"));
  CHECK(has(parse_error("date,expected_inflation_1y,cpi_index\n2000-13,1,2\n"), "t.csv:2: bad date"));
  CHECK(has(parse_error("date,expected_inflation_1y,cpi_index\n2000-01,1\n"), "t.csv:2: expected 3 fields"));
  CHECK(has(parse_error("date,expected_inflation_1y,cpi_index\n2000-01,1,2\n2000-Q2,1,2\n"), "mixed date frequencies"));
}

TEST_CASE("empty input") {
  for (const char* text : {"", "date,expected_inflation_1y,cpi_index\n"}) {
    try {
      parse(text);
      FAIL("expected failure");
    } catch (const iat::Error& e) {
      CHECK(e.code() == iat::ErrorCode::InsufficientData);
      CHECK(std::string(e.what()) == "no usable observations");
    }
  }
}

TEST_CASE("missing file") {
  try {
    read_panel_csv("/nonexistent/panel.csv");
    FAIL("expected failure");
  } catch (const iat::Error& e) {
    CHECK(e.code() == iat::ErrorCode::Io);
  }
}

TEST_CASE("quarter-on-quarter inflation from prices") {
  const std::vector<double> cpi{100, 101, 102, 103, 104.03, 105.06};
  const auto m = build_qoq_inflation(cpi, Frequency::Monthly);
  CHECK(std::isnan(m[0]));
  CHECK(std::isnan(m[2]));
  CHECK(m[3] == doctest::Approx(3.0));
  CHECK(m[5] == doctest::Approx(100.0 * (105.06 - 102.0) / 102.0));
  const auto q = build_qoq_inflation(cpi, Frequency::Quarterly);
  CHECK(q[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(build_qoq_inflation({100, 0, 101, 102}, Frequency::Monthly), iat::Error);
  CHECK_THROWS_AS(build_qoq_inflation({100, 101}, Frequency::Monthly), iat::Error);
}

TEST_CASE("horizon conversion") {
  CHECK(quarter_ahead_expectation(4.0) == 1.0);
  const double c = quarter_ahead_expectation(4.0, HorizonConversion::Compound);
  CHECK(std::pow(1.0 + c / 100.0, 4.0) == doctest::Approx(1.04).epsilon(1e-14));
  CHECK(c < 1.0);
  CHECK(std::isnan(quarter_ahead_expectation(std::nan(""), HorizonConversion::Compound)));
  CHECK_THROWS_AS(quarter_ahead_expectation(-100.0, HorizonConversion::Compound), iat::Error);
}

TEST_CASE("regression rows align expectations with realized inflation") {
  SurveySeries s;
  s.frequency = Frequency::Quarterly;
  s.dates = {"2000-Q1", "2000-Q2", "2000-Q3", "2000-Q4", "2001-Q1"};
  s.inflation = {0.5, 0.6, std::nan(""), 0.8, 0.9};
  s.expectation = {0.4, 0.45, 0.5, 0.55, 0.6};
  std::vector<std::string> dates;
  const auto d = build_regression_dataset(s, &dates);
  // t=2 (missing pi) and t=3 (missing pi_{t-1}) drop out
  REQUIRE(d.size() == 2);
  CHECK(dates == std::vector<std::string>{"2000-Q2", "2001-Q1"});
  CHECK(d.y[0] == 0.45);
  CHECK(d.x_prior[0] == 0.4);
  CHECK(d.x_fe[0] == doctest::Approx(0.2));
  CHECK(d.z[0] == 0.5);
  CHECK(d.z[1] == 0.8);
}

TEST_CASE("monthly rows use the three-month-old forecast") {
  SurveySeries s;
  s.frequency = Frequency::Monthly;
  for (int t = 0; t < 6; ++t) {
    s.dates.push_back("2000-0" + std::to_string(t + 1));
    s.inflation.push_back(0.1 * t);
    s.expectation.push_back(1.0 + t);
  }
  const auto d = build_regression_dataset(s);
  REQUIRE(d.size() == 3);
  CHECK(d.y[0] == 4.0);
  CHECK(d.x_prior[0] == 1.0);
  CHECK(d.z[0] == doctest::Approx(0.2));

  SurveySeries empty = s;
  std::fill(empty.inflation.begin(), empty.inflation.end(), std::nan(""));
  CHECK_THROWS_AS(build_regression_dataset(empty), iat::Error);
}
