#pragma once

#include <stdexcept>
#include <string>

namespace orbitkit {

// Thrown when a RootSystemId violates the supported family/rank bounds.
struct UnsupportedRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A Root handle was passed to a system it does not belong to.
struct ForeignRoot : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal computation produced a vector that is not a catalogued root.
// Must never fire; indicates a bug in the caller or in the tables.
struct NotARoot : std::logic_error {
    using std::logic_error::logic_error;
};

// A subset that must be pairwise orthogonal is not.
struct NotOrthogonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The prime is below the Coxeter number of the active system.
struct FieldTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exhaustive scan requested on a system above the guard size.
struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation defined for a specific system family only.
struct WrongSystem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root-expression or id parse failure.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace orbitkit
