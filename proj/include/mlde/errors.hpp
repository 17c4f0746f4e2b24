#pragma once

#include <stdexcept>
#include <string>

namespace mlde {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define MLDE_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                       \
    public:                                                           \
        using Error::Error;                                           \
        const char* kind() const noexcept override { return #Name; } \
    };

MLDE_DEFINE_ERROR(ParseError)
MLDE_DEFINE_ERROR(ZeroLeadingCoefficient)
MLDE_DEFINE_ERROR(NonUnitBase)
MLDE_DEFINE_ERROR(InsufficientOrder)
MLDE_DEFINE_ERROR(ConstantTermPresent)
MLDE_DEFINE_ERROR(UnknownForm)
MLDE_DEFINE_ERROR(NotIndicialRoot)
MLDE_DEFINE_ERROR(NoLogNeeded)
MLDE_DEFINE_ERROR(NonRationalRoot)
MLDE_DEFINE_ERROR(NotInCandidateList)
MLDE_DEFINE_ERROR(UnknownLabel)
MLDE_DEFINE_ERROR(NotPositiveDefinite)
MLDE_DEFINE_ERROR(UnknownWeight)
MLDE_DEFINE_ERROR(CharacterConstructionUnavailable)
MLDE_DEFINE_ERROR(ChecksumMismatch)

#undef MLDE_DEFINE_ERROR

// Raised when the recursion coefficient P(alpha + n) vanishes.
class Resonance : public Error {
public:
    Resonance(long n, const std::string& what) : Error(what), n_(n) {}
    const char* kind() const noexcept override { return "Resonance"; }
    long index() const noexcept { return n_; }

private:
    long n_;
};

}  // namespace mlde
