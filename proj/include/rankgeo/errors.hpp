#ifndef RANKGEO_ERRORS_HPP
#define RANKGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankgeo {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};
struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& msg) : Error(msg) {}
};
struct NoDefaultModulus : Error {
    explicit NoDefaultModulus(const std::string& msg) : Error(msg) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};
struct MixedContexts : Error {
    explicit MixedContexts(const std::string& msg) : Error(msg) {}
};
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};
struct ZeroVector : Error {
    explicit ZeroVector(const std::string& msg) : Error(msg) {}
};
struct DependentBasis : Error {
    explicit DependentBasis(const std::string& msg) : Error(msg) {}
};
struct WrongScalarField : Error {
    explicit WrongScalarField(const std::string& msg) : Error(msg) {}
};
struct ZeroCovector : Error {
    explicit ZeroCovector(const std::string& msg) : Error(msg) {}
};
struct CommonKernelNontrivial : Error {
    explicit CommonKernelNontrivial(const std::string& msg) : Error(msg) {}
};
struct NoSkewComplement : Error {
    explicit NoSkewComplement(const std::string& msg) : Error(msg) {}
};
struct NotProper : Error {
    explicit NotProper(const std::string& msg) : Error(msg) {}
};
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& msg) : Error(msg) {}
};
struct NonPolynomialResult : Error {
    explicit NonPolynomialResult(const std::string& msg) : Error(msg) {}
};
struct NegativeCount : Error {
    explicit NegativeCount(const std::string& msg) : Error(msg) {}
};
struct SyntaxError : Error {
    explicit SyntaxError(const std::string& msg) : Error(msg) {}
};
struct ExponentOutOfRange : Error {
    explicit ExponentOutOfRange(const std::string& msg) : Error(msg) {}
};
struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& msg) : Error(msg) {}
};

}  // namespace rankgeo

#endif
