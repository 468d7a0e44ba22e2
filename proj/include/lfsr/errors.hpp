#pragma once

#include <stdexcept>
#include <string>

namespace lfsr {

/// Error thrown for any contract violation in the toolkit. The message
/// starts with a short category tag ("shape-mismatch: ...", "io: ...") so
/// the CLI can print one categorized line and exit nonzero.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lfsr
