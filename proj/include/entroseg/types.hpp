#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace entroseg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatchError : Error { using Error::Error; };
struct NonMonotonicAbscissaError : Error { using Error::Error; };
struct NonFiniteValueError : Error { using Error::Error; };
struct OutOfDomainError : Error { using Error::Error; };
struct DegenerateAbscissaError : Error { using Error::Error; };
struct TooFewPointsError : Error { using Error::Error; };
struct DegenerateInputError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };
struct SynthesisFailureError : Error { using Error::Error; };
struct DegenerateSignalError : Error { using Error::Error; };

// Sampled 1D series. x strictly increasing, same length as y, all finite.
// Construct through make_signal to get the invariants checked.
struct Signal {
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const { return x.size(); }
};

} // namespace entroseg
