#ifndef MRM_ERRORS_HPP
#define MRM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mrm {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- parameter errors (CLI maps these to exit code 2) ---

struct InvalidParameter : Error {
    using Error::Error;
};

struct NonPrimeCharacteristic : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

struct UnsupportedSize : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

struct DegreeOutOfRange : InvalidParameter {
    using InvalidParameter::InvalidParameter;
};

// --- data errors (CLI maps these to exit code 3) ---

struct DataError : Error {
    using Error::Error;
};

struct FieldMismatch : DataError {
    using DataError::DataError;
};

struct DivisionByZero : DataError {
    using DataError::DataError;
};

struct ArityMismatch : DataError {
    using DataError::DataError;
};

struct DegreeTooLarge : DataError {
    using DataError::DataError;
};

struct ComponentDegreeTooLarge : DataError {
    using DataError::DataError;
};

struct LengthMismatch : DataError {
    using DataError::DataError;
};

struct ShapeMismatch : DataError {
    using DataError::DataError;
};

struct NotUnivariate : DataError {
    using DataError::DataError;
};

struct ParseError : DataError {
    using DataError::DataError;
};

// Raised when the evaluation matrix on a candidate information set turns
// out singular.  Not expected for the enumeration used here; the check
// guards the construction instead of trusting it.
struct InvalidInformationSet : Error {
    using Error::Error;
};

}  // namespace mrm

#endif
