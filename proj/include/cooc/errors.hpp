#pragma once

#include <stdexcept>
#include <string>

namespace cooc {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Query set has fewer than two distinct members.
struct invalid_query_error : error {
    using error::error;
};

// Predecessor construction rejected its key set (unsorted, duplicate, or
// out-of-universe keys).
struct build_error : error {
    using error::error;
};

// Gadget generator rejected its parameters.
struct invalid_spec_error : error {
    using error::error;
};

// File or stream failure.
struct io_error : error {
    using error::error;
};

// Serialized index problems, one class per failure mode so callers can
// distinguish them.
struct format_error : error {
    using error::error;
};
struct bad_magic_error : format_error {
    using format_error::format_error;
};
struct version_error : format_error {
    using format_error::format_error;
};
struct truncation_error : format_error {
    using format_error::format_error;
};
struct checksum_error : format_error {
    using format_error::format_error;
};

} // namespace cooc
