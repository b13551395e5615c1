#pragma once

#include <stdexcept>

namespace qlattice {

/// Thrown when an input would exceed a configured enumeration cap.
class cap_exceeded_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation defined only for p-groups receives a group
/// whose order is not a prime power.
class not_p_group_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace qlattice
