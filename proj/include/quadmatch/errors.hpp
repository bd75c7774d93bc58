#pragma once

#include <stdexcept>
#include <string>

namespace quadmatch {

// Base for all library errors. Subclasses distinguish domain failures from
// file/parse failures so the CLI can map them to exit codes 1 and 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem-level problems: missing path, unreadable/unwritable file.
struct IoError : Error {
    using Error::Error;
};

// A file was read but its content does not conform to the expected format.
struct FileFormatError : IoError {
    using IoError::IoError;
};

} // namespace quadmatch
