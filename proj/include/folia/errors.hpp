#pragma once

#include <stdexcept>
#include <string>

namespace folia {

// Three broad failure classes; the CLI maps each to its own exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    explicit ParseError(const std::string& what) : Error(what) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_ = 0;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class InconsistencyError : public Error {
public:
    using Error::Error;
};

#define FOLIA_DEFINE_ERROR(Name, Base)   \
    class Name : public Base {           \
    public:                              \
        using Base::Base;                \
    };

FOLIA_DEFINE_ERROR(DimensionMismatch, PreconditionError)
FOLIA_DEFINE_ERROR(IndexOutOfRange, PreconditionError)
FOLIA_DEFINE_ERROR(NotDivisible, PreconditionError)
FOLIA_DEFINE_ERROR(NotSingularAlongCenter, PreconditionError)
FOLIA_DEFINE_ERROR(DegenerateField, PreconditionError)
FOLIA_DEFINE_ERROR(SeedExhausted, PreconditionError)
FOLIA_DEFINE_ERROR(ChartOutOfRange, PreconditionError)
FOLIA_DEFINE_ERROR(BranchNotSingular, PreconditionError)
FOLIA_DEFINE_ERROR(UnsupportedBranch, PreconditionError)
FOLIA_DEFINE_ERROR(ZeroLambda, PreconditionError)
FOLIA_DEFINE_ERROR(NotStabilized, PreconditionError)
FOLIA_DEFINE_ERROR(NotIsolated, PreconditionError)
FOLIA_DEFINE_ERROR(HypothesisNotMet, PreconditionError)
FOLIA_DEFINE_ERROR(NonIntegerResult, InconsistencyError)

#undef FOLIA_DEFINE_ERROR

}  // namespace folia
