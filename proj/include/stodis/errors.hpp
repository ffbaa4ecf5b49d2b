#pragma once

#include <stdexcept>
#include <string>

namespace stodis {

/// Base for all library errors. `kind()` is a stable machine-readable tag
/// used by the CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct NegativeEntry : Error {
    explicit NegativeEntry(const std::string& msg) : Error("NegativeEntry", msg) {}
};

struct NotNormalized : Error {
    explicit NotNormalized(const std::string& msg) : Error("NotNormalized", msg) {}
};

struct InvalidDistribution : Error {
    explicit InvalidDistribution(const std::string& msg) : Error("InvalidDistribution", msg) {}
};

struct NotSquare : Error {
    explicit NotSquare(const std::string& msg) : Error("NotSquare", msg) {}
};

struct ColumnNotNormalized : Error {
    explicit ColumnNotNormalized(const std::string& msg) : Error("ColumnNotNormalized", msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error("SizeMismatch", msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error("OutOfRange", msg) {}
};

struct InvalidWeights : Error {
    explicit InvalidWeights(const std::string& msg) : Error("InvalidWeights", msg) {}
};

struct EmptyFamily : Error {
    explicit EmptyFamily(const std::string& msg) : Error("EmptyFamily", msg) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& msg) : Error("DimensionTooLarge", msg) {}
};

/// Solver could not reach the required residual / pivot quality.
struct NumericalFailure : Error {
    explicit NumericalFailure(const std::string& msg) : Error("NumericalFailure", msg) {}
};

/// Input file or JSON object does not match the expected schema.
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg) : Error("MalformedInput", msg) {}
};

}  // namespace stodis
