#pragma once

#include <stdexcept>

namespace betasimplex {

/// Raised when an argument lies outside the domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for (numerically) degenerate geometric configurations, which occur
/// with probability zero under every distribution sampled here.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace betasimplex
