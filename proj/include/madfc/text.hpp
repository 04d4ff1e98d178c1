#pragma once

#include <string>
#include <string_view>

namespace madfc {

// Shortest decimal string that parses back to exactly the same double.
// Integral values print without a fractional part ("2", not "2.0").
std::string shortest_repr(double value);

// Locale-free full-match number parse. Returns false on any trailing junk,
// empty input, or leading whitespace.
bool parse_double_strict(std::string_view text, double& out);

}  // namespace madfc
