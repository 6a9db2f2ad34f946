#include "fracwave_cli/format.hpp"

#include <cstdio>

namespace fracwave::cli {

namespace {

std::string printf_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

std::string format_exact(double v) {
  // avoid "-0" in files
  if (v == 0.0) v = 0.0;
  return printf_double("%.17g", v);
}

std::string format_short(double v) {
  if (v == 0.0) v = 0.0;
  return printf_double("%.6g", v);
}

std::string format_list(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_exact(v[i]);
  }
  return out;
}

}  // namespace fracwave::cli
