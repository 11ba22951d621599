#pragma once

#include <stdexcept>
#include <string>

namespace torus {

// Malformed input: unknown edge, bad vertex label, unparsable text.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The genus oracle refused to run because the search space exceeds its budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace torus
