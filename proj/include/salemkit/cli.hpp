#pragma once

// Command-line front end. Exit codes: 0 success, 1 input error, 2 a
// completed computation whose verdict is negative (not Salem, not
// realizable, conditions fail, verification failed).

#include <iosfwd>
#include <string>
#include <vector>

#include "salemkit/polycore.hpp"

namespace salemkit::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "salemkit.report/1";

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNegative = 2;

// "1,-3,1" (descending) or "t^2 - 3t + 1" (variable t or x).
IntPoly parse_poly(const std::string& text);

// "1/1000000000000", "1e-12" or "0.000001", converted exactly.
Rational parse_rational(const std::string& text);

// 12 significant digits.
std::string format_decimal(double v);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salemkit::cli
