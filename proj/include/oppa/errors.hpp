#pragma once

#include <stdexcept>
#include <string>

#include "oppa/model.hpp"

namespace oppa {

/// Base for all domain failures. `code` is a stable token suitable for
/// machine matching (`framework-invalid`, `adequacy-missing`, ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Document could not be read as the serialization format or violates the
/// schema. code is `syntax-error` or `schema-error`.
class ParseError : public Error {
public:
    ParseError(std::string code, const std::string& message, int line = 0, int column = 0)
        : Error(std::move(code), message), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed document whose content fails validation; carries the report.
class SemanticError : public Error {
public:
    SemanticError(const std::string& message, ValidationReport report)
        : Error("semantic-error", message), report_(std::move(report)) {}

    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

}  // namespace oppa
