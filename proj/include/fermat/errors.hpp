#pragma once

#include <stdexcept>
#include <string>

namespace fermat {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CoincidentPoints : Error {
    using Error::Error;
};

struct CoincidentVertices : Error {
    using Error::Error;
};

struct ConcentricCircles : Error {
    using Error::Error;
};

struct CoincidentCircles : Error {
    using Error::Error;
};

// Raised by gradient/residual evaluation at an exact triangle vertex,
// where the objective is not differentiable. Carries the 1-based index.
struct EvaluatedAtVertex : Error {
    int vertex;
    explicit EvaluatedAtVertex(int v)
        : Error("objective gradient is undefined at vertex " + std::to_string(v)), vertex(v) {}
};

struct StepTooLarge : Error {
    using Error::Error;
};

struct DegenerateSide : Error {
    using Error::Error;
};

struct CollinearOpposite : Error {
    using Error::Error;
};

struct NotAllAnglesBelowThreshold : Error {
    using Error::Error;
};

struct NumericalDegeneracy : Error {
    using Error::Error;
};

// Command-line front end errors. UsageError maps to exit status 2,
// IoError to exit status 1.
struct UsageError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace fermat
