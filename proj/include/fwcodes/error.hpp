#ifndef FWCODES_ERROR_HPP
#define FWCODES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fwc {

enum class Err {
    DegreeOutOfRange,
    NotIrreducible,
    DivisionByZero,
    NotASubfield,
    NoGF4Subfield,
    SizeCapExceeded,
    NotCoprime,
    ParseError,
    BadLength,
    NotQuadratic,
    NotTwoToOne,
    DivisibilityBreach,
    NonPowerOfTwoCount,
    SingularSystem,
    NonIntegralSolution,
    ZeroConstantTerm,
    DegenerateCoefficients,
    NoRootInField,
    ConstraintViolation,
    CacheError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fwc

#endif
