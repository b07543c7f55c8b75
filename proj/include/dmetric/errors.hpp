#pragma once

#include <stdexcept>
#include <string>

namespace dmetric {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Integration interval is empty or reversed (a >= b).
struct InvalidInterval : Error {
    using Error::Error;
};

/// An iterative procedure exhausted its budget before reaching tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

/// The excluded window around a singularity swallows the whole interval.
struct WindowCoversInterval : Error {
    using Error::Error;
};

/// Two inputs coincide where distinct inputs are required.
struct DegenerateInput : Error {
    using Error::Error;
};

/// A point claimed to lie on a chord deviates beyond tolerance.
struct OffChord : Error {
    using Error::Error;
};

/// A point lies outside (or on the boundary of) a convex domain.
struct OutsideDomain : Error {
    using Error::Error;
};

/// A line/boundary intersection is ill-conditioned beyond tolerance.
struct DegenerateBoundary : Error {
    using Error::Error;
};

}  // namespace dmetric
