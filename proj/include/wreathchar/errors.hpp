#pragma once

#include <stdexcept>

namespace wreathchar {

// Internal consistency failure. Raised when a computed quantity violates an
// identity that must hold for every valid input; never a usage error.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Requested computation exceeds the configured cost budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wreathchar
