#pragma once

#include <string>

namespace lz {

// Locale-independent decimal formatting (std::to_chars), so CSV artifacts
// are byte-identical across runs and environments.

// Shortest round-trip representation; used when echoing configuration.
std::string format_double(double v);

// General format with the given number of significant digits.
std::string format_double_sig(double v, int significant);

}  // namespace lz
