// Engine error hierarchy. Every failure mode has a stable name that the CLI
// prints as "error: <Name>: <detail>".

#ifndef NCDISC_ERRORS_HPP
#define NCDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncdisc {

class EngineError : public std::runtime_error {
public:
    EngineError(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define NCDISC_ERROR_TYPE(ClassName, Tag)                             \
    class ClassName : public EngineError {                            \
    public:                                                           \
        explicit ClassName(const std::string& detail)                 \
            : EngineError(Tag, detail) {}                             \
    }

NCDISC_ERROR_TYPE(IncompatibleFieldError, "IncompatibleField");
NCDISC_ERROR_TYPE(DivisionByZeroError, "DivisionByZero");
NCDISC_ERROR_TYPE(NotAFieldError, "NotAField");
NCDISC_ERROR_TYPE(DimensionMismatchError, "DimensionMismatch");
NCDISC_ERROR_TYPE(NotDivisibleError, "NotDivisible");
NCDISC_ERROR_TYPE(ZeroPolynomialError, "ZeroPolynomial");
NCDISC_ERROR_TYPE(AlgebraMismatchError, "AlgebraMismatch");
NCDISC_ERROR_TYPE(SizeLimitError, "SizeLimit");
NCDISC_ERROR_TYPE(NotAHomomorphismError, "NotAHomomorphism");
NCDISC_ERROR_TYPE(PreconditionViolationError, "PreconditionViolation");
NCDISC_ERROR_TYPE(InvarianceViolatedError, "InvarianceViolated");
NCDISC_ERROR_TYPE(InternalInconsistencyError, "InternalInconsistency");
NCDISC_ERROR_TYPE(ParseError, "Parse");
NCDISC_ERROR_TYPE(IndexError, "Index");

#undef NCDISC_ERROR_TYPE

// Raised when a declared central generator fails to commute; carries the
// offending generator pair (1-based).
class NotCentralError : public EngineError {
public:
    NotCentralError(int i, int j, const std::string& detail)
        : EngineError("NotCentral",
                      "x" + std::to_string(i) + "^d does not commute with x" +
                          std::to_string(j) + ": " + detail),
          i_(i), j_(j) {}

    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_;
    int j_;
};

} // namespace ncdisc

#endif
