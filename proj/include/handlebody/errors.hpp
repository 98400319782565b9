#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Error taxonomy mirrored by the CLI exit codes.
//   input_error          -> 1  invalid instance / malformed input
//   unsupported_error    -> 2  configuration outside the supported range
//   resource_error       -> 3  a configurable cap was exceeded
//   inconsistency_error  -> 4  two independent routes disagree (a bug or bad data)

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hb
