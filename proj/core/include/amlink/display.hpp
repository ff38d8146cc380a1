#pragma once

#include <string>

namespace amlink {

/// Cut-off as shown in reports: truncated (not rounded) to 2 decimals,
/// after absorbing representation error below 1e-9.
std::string format_cutoff(double value);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_exact(double value);

}  // namespace amlink
