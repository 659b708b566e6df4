#pragma once

#include <stdexcept>
#include <string>

namespace sskd {

// A mathematical precondition failed, e.g. s_0 applied to a composition
// whose first part is zero, or an embedding on a shape that does not admit it.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A composition is not reachable from eta in the affine orbit search.
struct UnreachableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed value crossing an API boundary: bad tabloid, bad JSON, bad index.
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A key-decomposition postcondition failed.  This is surfaced, never patched
// over, since it would amount to a counterexample to the decomposition claim.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unparseable text input (CLI strings); maps to a usage error in the CLI.
struct TextParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sskd
