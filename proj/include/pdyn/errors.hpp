#pragma once

#include <stdexcept>
#include <string>

namespace pdyn {

// How the command line reports a failure.
enum class ErrorClass { Negative, Input, Budget };

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, ErrorClass cls)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), cls_(cls) {}
    const std::string& kind() const { return kind_; }
    ErrorClass error_class() const { return cls_; }

private:
    std::string kind_;
    ErrorClass cls_;
};

#define PDYN_ERROR(Name, Cls)                                              \
    struct Name : Error {                                                  \
        explicit Name(const std::string& w = "") : Error(#Name, w, Cls) {} \
    }

PDYN_ERROR(NotDivisible, ErrorClass::Negative);
PDYN_ERROR(NotASquare, ErrorClass::Negative);
PDYN_ERROR(BothZero, ErrorClass::Input);
PDYN_ERROR(VariableLimit, ErrorClass::Input);
PDYN_ERROR(DivisionByZero, ErrorClass::Input);

PDYN_ERROR(DegreeLimitExceeded, ErrorClass::Budget);
PDYN_ERROR(NotExtendable, ErrorClass::Input);
PDYN_ERROR(ZeroJacobian, ErrorClass::Negative);
PDYN_ERROR(EliminationDegenerate, ErrorClass::Negative);
PDYN_ERROR(PreconditionViolated, ErrorClass::Input);

PDYN_ERROR(NotIsolated, ErrorClass::Negative);
PDYN_ERROR(ShapeMismatch, ErrorClass::Input);
PDYN_ERROR(CommutationFails, ErrorClass::Negative);
PDYN_ERROR(NoCaseMatches, ErrorClass::Negative);

PDYN_ERROR(InfinityWeightViolation, ErrorClass::Negative);
PDYN_ERROR(BadPointCount, ErrorClass::Input);
PDYN_ERROR(NoCaseMatch, ErrorClass::Negative);

PDYN_ERROR(NotCommuting, ErrorClass::Negative);
PDYN_ERROR(ScalarNotSolvable, ErrorClass::Negative);
PDYN_ERROR(NotSymmetric, ErrorClass::Negative);
PDYN_ERROR(NotSplit, ErrorClass::Negative);
PDYN_ERROR(SingularCurve, ErrorClass::Input);

PDYN_ERROR(BudgetExceeded, ErrorClass::Budget);

PDYN_ERROR(SyntaxError, ErrorClass::Input);
PDYN_ERROR(UnknownVariable, ErrorClass::Input);
PDYN_ERROR(RootOfUnityUndefined, ErrorClass::Input);

#undef PDYN_ERROR

}  // namespace pdyn
