#pragma once

#include <stdexcept>
#include <string>

namespace rank2 {

// Error classes map 1:1 onto CLI exit codes.
enum class ErrorClass {
    Usage = 1,     // bad invocation, parse errors
    Domain = 2,    // mathematically well-posed refusals
    Resource = 3,  // size/degree caps
    Internal = 4,  // a theory-guaranteed step failed; a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), cls_(cls), name_(std::move(name)) {}

    ErrorClass error_class() const noexcept { return cls_; }
    const std::string& name() const noexcept { return name_; }

private:
    ErrorClass cls_;
    std::string name_;
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& m) : Error(ErrorClass::Domain, "FieldMismatch", m) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& m) : Error(ErrorClass::Domain, "DivisionByZero", m) {}
};
struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(const std::string& m) : Error(ErrorClass::Domain, "NonPrimeModulus", m) {}
};
struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& m) : Error(ErrorClass::Domain, "AlgebraMismatch", m) {}
};
struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& m) : Error(ErrorClass::Usage, "UnknownGenerator", m) {}
};
struct DegreeTooLarge : Error {
    explicit DegreeTooLarge(const std::string& m) : Error(ErrorClass::Resource, "DegreeTooLarge", m) {}
};
struct MatrixTooLarge : Error {
    explicit MatrixTooLarge(const std::string& m) : Error(ErrorClass::Resource, "MatrixTooLarge", m) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error(ErrorClass::Domain, "DimensionMismatch", m) {}
};
struct CharacteristicNotZero : Error {
    explicit CharacteristicNotZero(const std::string& m)
        : Error(ErrorClass::Domain, "CharacteristicNotZero", m) {}
};
struct BadIndexPair : Error {
    explicit BadIndexPair(const std::string& m) : Error(ErrorClass::Domain, "BadIndexPair", m) {}
};
struct NonCommutingPair : Error {
    explicit NonCommutingPair(const std::string& m) : Error(ErrorClass::Domain, "NonCommutingPair", m) {}
};
struct ConstantInput : Error {
    explicit ConstantInput(const std::string& m) : Error(ErrorClass::Domain, "ConstantInput", m) {}
};
struct ConstantU : Error {
    explicit ConstantU(const std::string& m) : Error(ErrorClass::Domain, "ConstantU", m) {}
};
struct IndependentGenerators : Error {
    explicit IndependentGenerators(const std::string& m)
        : Error(ErrorClass::Domain, "IndependentGenerators", m) {}
};
struct TranscendenceDegreeTwo : Error {
    explicit TranscendenceDegreeTwo(const std::string& m)
        : Error(ErrorClass::Domain, "TranscendenceDegreeTwo", m) {}
};
struct NotInRootAlgebra : Error {
    explicit NotInRootAlgebra(const std::string& m) : Error(ErrorClass::Internal, "NotInRootAlgebra", m) {}
};
struct DegenerateU0 : Error {
    explicit DegenerateU0(const std::string& m) : Error(ErrorClass::Domain, "DegenerateU0", m) {}
};
struct InternalVerificationFailure : Error {
    explicit InternalVerificationFailure(const std::string& m)
        : Error(ErrorClass::Internal, "InternalVerificationFailure", m) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& m)
        : Error(ErrorClass::Usage, "ParseError",
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + m),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace rank2
