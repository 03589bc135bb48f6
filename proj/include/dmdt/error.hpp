#pragma once

#include <stdexcept>
#include <string>

namespace dmdt {

/// Raised when stored bytes cannot be turned back into a signal: bad magic,
/// unsupported version, truncated data, range-coder state violations or a
/// CRC32 mismatch. Precondition violations use std::invalid_argument and
/// quantizer overflow uses std::overflow_error.
class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input files during ingestion.
class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dmdt
