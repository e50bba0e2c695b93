#pragma once

#include <stdexcept>
#include <string>

namespace artgallery {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Malformed text input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The construction cannot be realized with the given parameters.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// The formula has no solution on the unit cube.
class UnsatisfiableError : public Error {
public:
    using Error::Error;
};

/// A combinatorial object is not a surface (pseudomanifold check failed).
class TopologyError : public Error {
public:
    using Error::Error;
};

/// A search exceeded its work budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

}  // namespace artgallery
