#pragma once

#include <stdexcept>
#include <string>

namespace eprsim {

// Malformed input: wrong sizes, bad entries, unparsable files.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size/range precondition was violated (Sylvester exponent, label ranges).
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested a construction the library cannot provide (no admissible
// Hadamard order, no catalogued BSM composite).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a normalization that was not established.
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature grid does not cover the wavefunction support.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Guidance velocity requested too close to a wavefunction node.
struct NodeError : std::runtime_error {
    NodeError(const std::string& what, double y1_, double y2_, double t_)
        : std::runtime_error(what), y1(y1_), y2(y2_), t(t_) {}
    double y1, y2, t;
};

// BSM output is not close enough to a single product ket.
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace eprsim
