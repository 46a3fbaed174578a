#pragma once

#include <stdexcept>
#include <string>

namespace moran {

/// Input text (measure config or frequency literal) that does not conform
/// to the documented grammar. Carries a 1-based line/column when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line = 0, int column = 0)
        : std::runtime_error(line > 0
              ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
              : message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A construction or classification was asked for on a measure that violates
/// its mathematical hypotheses (e.g. a digit sharing a factor with p or q).
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested certified accuracy would need more working precision than
/// the configured cap allows. Never degraded silently.
class PrecisionLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace moran
