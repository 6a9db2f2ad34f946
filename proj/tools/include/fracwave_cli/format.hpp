#pragma once

#include <span>
#include <string>

namespace fracwave::cli {

/// Shortest-safe round-trip form: 17 significant digits, "%.17g".
std::string format_exact(double v);

/// Compact form for labels and file names: "%.6g".
std::string format_short(double v);

/// "a, b, c" with format_exact.
std::string format_list(std::span<const double> v);

}  // namespace fracwave::cli
