#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

// Base class for every library error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration-level problems: bad text input, invalid algebra/basis/partition
// setup, operands from different algebras. The CLI maps these to exit code 2.
struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct SpecMismatchError : ValidationError {
    using ValidationError::ValidationError;
};
struct InputDependsOnX0Error : ValidationError {
    using ValidationError::ValidationError;
};
struct BlockSizeTwoError : ValidationError {
    using ValidationError::ValidationError;
};
struct NotOddPartitionError : ValidationError {
    using ValidationError::ValidationError;
};

// A mathematical check on the input failed; the message names the failing
// identity and, where meaningful, the first offending monomial. The CLI maps
// these to exit code 1.
struct KernelError : Error {
    using Error::Error;
};
struct NotDivisibleError : KernelError {
    NotDivisibleError(int variable, std::string monomial, const std::string& what)
        : KernelError(what), variable(variable), monomial(std::move(monomial)) {}
    int variable;
    std::string monomial;
};
struct NotASliceInputError : KernelError {
    using KernelError::KernelError;
};
struct NotInKernelSAError : KernelError {
    using KernelError::KernelError;
};
struct InputNotPSliceError : KernelError {
    using KernelError::KernelError;
};
struct NotInFPError : KernelError {
    using KernelError::KernelError;
};

}  // namespace dunkl
