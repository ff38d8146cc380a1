#include "amlink/display.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

namespace amlink {

std::string format_cutoff(double value) {
  const double scaled = std::trunc(value * 100.0 + (value < 0 ? -1e-7 : 1e-7));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", scaled / 100.0);
  return buf;
}

std::string format_exact(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) {
    return std::to_string(value);
  }
  return std::string(buf, end);
}

}  // namespace amlink
