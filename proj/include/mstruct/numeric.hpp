#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mstruct {

/// Shortest decimal form that parses back to exactly the same double.
/// Infinities render as "inf"/"-inf". Used by the MVX1 header, CSV cells and
/// anywhere else output must be byte-deterministic.
std::string format_double(double value);

/// Strict full-string parse; rejects trailing characters. Accepts the
/// "inf"/"-inf" forms format_double emits.
std::optional<double> parse_double(std::string_view text);

std::optional<long long> parse_integer(std::string_view text);

}  // namespace mstruct
