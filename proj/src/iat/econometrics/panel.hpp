#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iat/econometrics/threshold.hpp"

namespace iat::econometrics {

enum class Frequency { Monthly, Quarterly };

// Periods between a survey answer and the quarter it forecasts; also the lag
// used for the quarter-on-quarter inflation rate.
inline int quarter_lag(Frequency f) { return f == Frequency::Monthly ? 3 : 1; }

/// Raw survey panel as read from CSV. Missing cells are NaN.
/// Dates are strictly increasing and gap-free at the declared frequency.
struct ExpectationPanel {
  Frequency frequency = Frequency::Monthly;
  std::vector<std::string> dates;
  std::vector<double> expected_inflation_1y;        // annualized percent
  std::optional<std::vector<double>> cpi_index;     // price level
  std::optional<std::vector<double>> qoq_inflation; // quarterly pp

  std::size_t size() const { return dates.size(); }
};

/// Parses `date,expected_inflation_1y,cpi_index` or
/// `date,expected_inflation_1y,qoq_inflation`; dates `YYYY-MM` or `YYYY-Qq`.
/// Empty cells and `NA` are missing. Errors carry the offending line number.
ExpectationPanel parse_panel_csv(std::istream& in, const std::string& source = "<input>");
ExpectationPanel read_panel_csv(const std::string& path);

/// 100 (P_t - P_{t-lag}) / P_{t-lag}, lag 3 for monthly and 1 for quarterly
/// data. Leading entries are NaN.
std::vector<double> build_qoq_inflation(const std::vector<double>& price_level, Frequency freq);

enum class HorizonConversion { Divide, Compound };

/// One-year-ahead expectation (annualized percent) to quarter-ahead
/// quarterly pp: e/4, or ((1 + e/100)^(1/4) - 1) 100 in compound mode.
std::vector<double> build_quarter_ahead_expectation(const std::vector<double>& e_1y,
                                                    HorizonConversion mode = HorizonConversion::Divide);
double quarter_ahead_expectation(double e_1y, HorizonConversion mode = HorizonConversion::Divide);

/// Aligned quarterly-pp series, one entry per panel date.
struct SurveySeries {
  Frequency frequency = Frequency::Monthly;
  std::vector<std::string> dates;
  std::vector<double> inflation;    // pi_t
  std::vector<double> expectation;  // E_t pi_{t+h}
};

SurveySeries prepare_series(const ExpectationPanel& panel,
                            HorizonConversion mode = HorizonConversion::Divide);

/// Regression rows for every t with pi_t, E_{t-h} pi_t, E_t pi_{t+h} and
/// pi_{t-1} all present (dates with a missing input are dropped). `dates_out`
/// receives the date of each kept row.
RegressionDataset build_regression_dataset(const SurveySeries& s,
                                           std::vector<std::string>* dates_out = nullptr);

}  // namespace iat::econometrics
