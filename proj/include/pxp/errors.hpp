#pragma once

#include <stdexcept>

namespace pxp {

// Thrown when a request exceeds the enumeration/diagonalization scale
// (CLI maps this to exit code 3).
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pxp
