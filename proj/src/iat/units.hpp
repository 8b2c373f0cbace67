#pragma once

// Rates are stored as quarterly percentage points everywhere inside the
// library. Reported values are annualized by simple scaling.

namespace iat::units {

inline constexpr double kQuartersPerYear = 4.0;

constexpr double annualize(double quarterly_pp) { return quarterly_pp * kQuartersPerYear; }
constexpr double quarterly(double annualized_pp) { return annualized_pp / kQuartersPerYear; }

}  // namespace iat::units
