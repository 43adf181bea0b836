#pragma once

#include <optional>
#include <string>

#include "fqsum/enclosure.hpp"

namespace fqsum {

/// Truncated decimal expansion of a nonnegative enclosure with exactly
/// `fractional_digits` digits after the point, provided both endpoints
/// truncate to the same digits. Returns nullopt when the digits are not
/// certified at that length (or the enclosure extends below zero).
std::optional<std::string> certified_truncation(const Enclosure& e, unsigned fractional_digits);

/// Largest number of fractional digits for which certified_truncation
/// succeeds, capped at `cap`. Returns 0 when not even the integer part is
/// certified.
unsigned max_certified_fractional_digits(const Enclosure& e, unsigned cap = 512);

/// Decimal rendering of one endpoint with directed rounding, suitable for
/// serializing lo/hi losslessly enough to be re-read as a bound.
std::string decimal_lower(const Enclosure& e, unsigned significant_digits);
std::string decimal_upper(const Enclosure& e, unsigned significant_digits);

}  // namespace fqsum
