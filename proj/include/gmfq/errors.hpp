#pragma once

#include <stdexcept>
#include <string>

namespace gmfq {

// Error taxonomy mirrors the CLI exit codes:
//   usage errors       -> 1 (raised by the argument parser, not here)
//   DataError          -> 2 (malformed or inconsistent input data)
//   VerificationError  -> 3 (round-trip mismatch or theorem contradiction;
//                            signals a computation bug, not bad input)

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gmfq
