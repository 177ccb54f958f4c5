#pragma once

#include <stdexcept>
#include <string>

namespace sbmocc {

// Invalid wiring between components (missing table, grid mismatch, bad config file).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed to converge or produced an unusable result.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fit cannot be performed on the given sample (e.g. all-zero data).
struct degenerate_fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sbmocc
