#pragma once

#include <stdexcept>

namespace eip {

// Thrown when an exact-enumeration operation would exceed its size cap.
class UnsupportedSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace eip
