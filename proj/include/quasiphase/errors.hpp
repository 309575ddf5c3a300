#pragma once

#include <stdexcept>
#include <string>

namespace quasiphase {

/// Raised when an input violates a mathematical precondition of the analysis.
/// `citation()` names the result whose hypothesis failed.
class DomainError : public std::runtime_error {
public:
    DomainError(const std::string& what, std::string citation)
        : std::runtime_error(what), citation_(std::move(citation)) {}

    const std::string& citation() const noexcept { return citation_; }

private:
    std::string citation_;
};

/// Syntax error in a system description, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace quasiphase
