#pragma once

#include <stdexcept>
#include <string>

namespace smtlab {

// Malformed textual input (polynomial grammar, scenario files).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

// A configured budget ran out: retry limits, quadrature doublings,
// subset-enumeration caps, sampling attempts.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a mathematical precondition of the requested analysis
// (degenerate composition, empty variety, inconsistent curve/ideal, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Cross-checked internal computations disagree; signals an engine bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace smtlab
