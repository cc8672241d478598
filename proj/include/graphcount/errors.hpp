#pragma once

#include <stdexcept>
#include <string>

namespace graphcount {

/// Thrown when a request exceeds a feasibility guard (e.g. asking for an
/// n!-element scan at an n where that is refused by default). Guards are
/// hard errors, never silent truncation.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an exact identity that must hold by construction fails
/// (non-integer coefficient after a group average, nonzero division
/// remainder, broken symmetry). Always indicates an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace graphcount
