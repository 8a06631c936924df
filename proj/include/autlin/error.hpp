#ifndef AUTLIN_ERROR_HPP
#define AUTLIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace autlin {

// Stable error codes; the CLI maps these to machine-readable reports.
enum class Err {
    MismatchedContext,
    DivisionByZero,
    NotAnAutomorphism,
    JacobianNotConstant,
    OriginNotFixed,
    LinearPartNotInS,
    NontrivialLinearPart,
    LinearPartNotInU,
    DegreeOutOfRange,
    DivisibilityViolated,
    PositiveCharacteristic,
    NotNilpotent,
    NotBad,
    ScopeExceeded,
    EliminationFailed,
    ScalingViolated,
    SampleDegenerate,
    UnsupportedDescriptor,
    SyntaxError,
    DomainError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace autlin

#endif
