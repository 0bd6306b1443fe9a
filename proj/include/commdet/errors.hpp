#pragma once

#include <stdexcept>
#include <string>

namespace commdet {

// Bad input: malformed files, infeasible generator parameters,
// contradictory constraints. CLI exit code 2.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: eigensolver non-convergence, dimension mismatches
// inside the detectors. CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace commdet
