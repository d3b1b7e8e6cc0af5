#pragma once

#include <stdexcept>

namespace textmine {

// Error categories; the CLI maps them to exit codes (data 2, domain 3,
// numerical 4).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace textmine
