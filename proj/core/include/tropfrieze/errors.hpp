#pragma once

#include <stdexcept>

namespace tropfrieze {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* two values live over different bases */
struct BasisMismatch : Error {
    using Error::Error;
};

/* malformed or schema-violating spec document */
struct SpecError : Error {
    using Error::Error;
};

/* no determining angle for a simple, or two of them disagreeing */
struct ThetaError : Error {
    using Error::Error;
};

/* unmet frieze hypotheses (even d, not 2d-CY, bad shape, work limit) */
struct FriezeError : Error {
    using Error::Error;
};

}  // namespace tropfrieze
