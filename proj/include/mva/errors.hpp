#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mva {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input. `code` is a stable short tag (e.g. "marked-count"),
// `location` points into the input (JSON path or character offset).
struct ParseError : std::runtime_error {
    ParseError(std::string code_, std::string location_, const std::string& msg)
        : std::runtime_error(location_.empty() ? msg : location_ + ": " + msg),
          code(std::move(code_)),
          location(std::move(location_))
    {
    }
    std::string code;
    std::string location;
};

// Structurally valid input that does not describe a consistent diagram.
struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mva
