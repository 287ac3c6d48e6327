#pragma once

#include <stdexcept>
#include <string>

namespace sigdim {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration (unknown keys, unparsable values, missing files named in config).
struct ConfigError : Error {
    using Error::Error;
};

// Input data violates a contract (gaps, non-monotone counts, malformed records).
struct DataError : Error {
    using Error::Error;
};

// A pipeline stage was invoked before the stage that produces its input.
struct MissingArtifactError : Error {
    using Error::Error;
};

// Filesystem / serialization failures.
struct IoError : Error {
    using Error::Error;
};

}  // namespace sigdim
