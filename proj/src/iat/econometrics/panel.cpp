#include "iat/econometrics/panel.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "iat/error.hpp"

namespace iat::econometrics {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, source + ":" + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& cell, const std::string& source, std::size_t line) {
  if (cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan") return kNaN;
  double v = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
  if (ec != std::errc() || ptr != end) parse_error(source, line, "not a number: '" + cell + "'");
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return -1;
  return v;
}

// Period index (months or quarters since year 0) and the date's frequency.
std::pair<long, Frequency> parse_date(const std::string& d, const std::string& source,
                                      std::size_t line) {
  if (d.size() == 7 && d[4] == '-') {
    const int year = parse_int(std::string_view(d).substr(0, 4));
    if (d[5] == 'Q' || d[5] == 'q') {
      const int q = parse_int(std::string_view(d).substr(6, 1));
      if (year >= 0 && q >= 1 && q <= 4) return {year * 4L + (q - 1), Frequency::Quarterly};
    } else {
      const int m = parse_int(std::string_view(d).substr(5, 2));
      if (year >= 0 && m >= 1 && m <= 12) return {year * 12L + (m - 1), Frequency::Monthly};
    }
  }
  parse_error(source, line, "bad date '" + d + "' (expected YYYY-MM or YYYY-Qq)");
}

}  // namespace

ExpectationPanel parse_panel_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split_csv(line);
      break;
    }
  }
  if (header.empty()) fail(ErrorCode::InsufficientData, "no usable observations");
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0].erase(0, 3);
  if (header.size() != 3 || header[0] != "date" || header[1] != "expected_inflation_1y" ||
      (header[2] != "cpi_index" && header[2] != "qoq_inflation")) {
    parse_error(source, line_no,
                "header must be date,expected_inflation_1y,cpi_index or "
                "date,expected_inflation_1y,qoq_inflation");
  }
  const bool has_cpi = header[2] == "cpi_index";

  ExpectationPanel panel;
  std::vector<double> third;
  std::optional<long> prev_index;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 3) parse_error(source, line_no, "expected 3 fields");
    const auto [index, freq] = parse_date(cells[0], source, line_no);
    if (!prev_index) {
      panel.frequency = freq;
    } else {
      if (freq != panel.frequency) parse_error(source, line_no, "mixed date frequencies");
      if (index <= *prev_index) parse_error(source, line_no, "dates must be strictly increasing");
      if (index != *prev_index + 1) parse_error(source, line_no, "gap in dates before " + cells[0]);
    }
    prev_index = index;
    panel.dates.push_back(cells[0]);
    panel.expected_inflation_1y.push_back(parse_number(cells[1], source, line_no));
    third.push_back(parse_number(cells[2], source, line_no));
  }
  if (panel.dates.empty()) fail(ErrorCode::InsufficientData, "no usable observations");
  if (has_cpi) {
    panel.cpi_index = std::move(third);
  } else {
    panel.qoq_inflation = std::move(third);
  }
  return panel;
}

ExpectationPanel read_panel_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open input '" + path + "'");
  return parse_panel_csv(in, path);
}

std::vector<double> build_qoq_inflation(const std::vector<double>& price_level, Frequency freq) {
  require(price_level.size() >= 4, "need at least 4 price observations",
          ErrorCode::InsufficientData);
  for (double p : price_level) {
    require(std::isnan(p) || p > 0.0, "price levels must be strictly positive");
  }
  const auto lag = static_cast<std::size_t>(quarter_lag(freq));
  std::vector<double> out(price_level.size(), kNaN);
  for (std::size_t t = lag; t < price_level.size(); ++t) {
    const double prev = price_level[t - lag];
    out[t] = 100.0 * (price_level[t] - prev) / prev;
  }
  return out;
}

double quarter_ahead_expectation(double e_1y, HorizonConversion mode) {
  if (mode == HorizonConversion::Divide) return e_1y / 4.0;
  if (std::isnan(e_1y)) return e_1y;
  require(e_1y > -100.0, "compound conversion needs expectations above -100%");
  return (std::pow(1.0 + e_1y / 100.0, 0.25) - 1.0) * 100.0;
}

std::vector<double> build_quarter_ahead_expectation(const std::vector<double>& e_1y,
                                                    HorizonConversion mode) {
  std::vector<double> out;
  out.reserve(e_1y.size());
  for (double e : e_1y) out.push_back(quarter_ahead_expectation(e, mode));
  return out;
}

SurveySeries prepare_series(const ExpectationPanel& panel, HorizonConversion mode) {
  SurveySeries s;
  s.frequency = panel.frequency;
  s.dates = panel.dates;
  s.expectation = build_quarter_ahead_expectation(panel.expected_inflation_1y, mode);
  if (panel.cpi_index) {
    s.inflation = build_qoq_inflation(*panel.cpi_index, panel.frequency);
  } else if (panel.qoq_inflation) {
    s.inflation = *panel.qoq_inflation;
  } else {
    fail(ErrorCode::InvalidArgument, "panel has neither cpi_index nor qoq_inflation");
  }
  return s;
}

RegressionDataset build_regression_dataset(const SurveySeries& s,
                                           std::vector<std::string>* dates_out) {
  const auto h = static_cast<std::size_t>(quarter_lag(s.frequency));
  RegressionDataset d;
  for (std::size_t t = std::max<std::size_t>(h, 1); t < s.inflation.size(); ++t) {
    const double pi = s.inflation[t];
    const double prior = s.expectation[t - h];
    const double post = s.expectation[t];
    const double pi_lag = s.inflation[t - 1];
    if (std::isnan(pi) || std::isnan(prior) || std::isnan(post) || std::isnan(pi_lag)) continue;
    d.y.push_back(post);
    d.x_prior.push_back(prior);
    d.x_fe.push_back(pi - prior);
    d.z.push_back(pi_lag);
    if (dates_out) dates_out->push_back(s.dates[t]);
  }
  if (d.size() == 0) fail(ErrorCode::InsufficientData, "no usable observations");
  return d;
}

}  // namespace iat::econometrics
