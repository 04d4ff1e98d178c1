#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace madfc {

// Dynamic-range caveat threshold: plotting a dataset whose coordinates exceed
// this magnitude in MAD space prints a single stderr warning, since the
// transform's useful range is roughly two orders of magnitude of fold change
// on each side of no change.
inline constexpr double kDynamicRangeLimitMad = 100.0;

// Runs one command. args excludes the program name; out receives numeric
// results and help text, err receives warnings and error messages. Returns 0
// on success, 1 on data or domain errors, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace madfc
