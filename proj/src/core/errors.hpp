#pragma once

#ifdef __FAST_MATH__
#error fast math enabled (-ffast-math); compensated summation and golden tables would break.
#endif

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kummersum {

// Stable error codes, shared with the C API in include/kummersum.h.
enum class ErrorCode : int {
    InvalidArgument = 1,
    UnknownSeries = 2,
    Parse = 3,
    NonPositiveTerm = 4,
    IndexBeforeStart = 5,
    MissingTailIntegral = 6,
    MissingDerivative = 7,
    Precondition = 8,
    BudgetExhausted = 9,
    ZetaOverflow = 10,
    ShapeCheck = 11,
    Internal = 12,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class NonPositiveTermError : public Error {
public:
    NonPositiveTermError(std::int64_t index, double value)
        : Error(ErrorCode::NonPositiveTerm,
                "term at n=" + std::to_string(index) +
                    " is not a positive finite real (got " + std::to_string(value) + ")"),
          index_(index) {}
    std::int64_t index() const { return index_; }

private:
    std::int64_t index_;
};

class IndexBeforeStartError : public Error {
public:
    IndexBeforeStartError(std::int64_t index, std::int64_t start)
        : Error(ErrorCode::IndexBeforeStart,
                "index n=" + std::to_string(index) + " precedes the series start n0=" +
                    std::to_string(start)) {}
};

class UnknownSeriesError : public Error {
public:
    explicit UnknownSeriesError(const std::string& name)
        : Error(ErrorCode::UnknownSeries, "unknown series \"" + name + "\"") {}
};

class LexError : public Error {
public:
    LexError(std::size_t pos, const std::string& what)
        : Error(ErrorCode::Parse, "lex error at byte " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& expected)
        : Error(ErrorCode::Parse,
                "parse error at byte " + std::to_string(pos) + ": expected " + expected),
          pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

class UnknownFunctionError : public Error {
public:
    explicit UnknownFunctionError(const std::string& name)
        : Error(ErrorCode::Parse, "unknown function \"" + name + "\"") {}
};

class ArityError : public Error {
public:
    ArityError(const std::string& name, int expected, int got)
        : Error(ErrorCode::Parse, "function \"" + name + "\" takes " +
                                      std::to_string(expected) + " argument(s), got " +
                                      std::to_string(got)) {}
};

class MissingTailIntegralError : public Error {
public:
    explicit MissingTailIntegralError(const std::string& series)
        : Error(ErrorCode::MissingTailIntegral,
                "series \"" + series + "\" has no closed-form tail integral") {}
};

class MissingDerivativeError : public Error {
public:
    explicit MissingDerivativeError(const std::string& series)
        : Error(ErrorCode::MissingDerivative,
                "series \"" + series + "\" has no closed-form term derivative") {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what)
        : Error(ErrorCode::Precondition, what) {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what)
        : Error(ErrorCode::BudgetExhausted, what) {}
};

class ZetaOverflowError : public Error {
public:
    explicit ZetaOverflowError(std::int64_t index)
        : Error(ErrorCode::ZetaOverflow,
                "zeta value became non-finite at n=" + std::to_string(index)) {}
};

class ShapeCheckError : public Error {
public:
    explicit ShapeCheckError(const std::string& what)
        : Error(ErrorCode::ShapeCheck, what) {}
};

}  // namespace kummersum
