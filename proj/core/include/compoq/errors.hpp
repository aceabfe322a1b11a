#ifndef COMPOQ_ERRORS_HPP
#define COMPOQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace compoq {

// Precondition violations on user-supplied parameters.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A series whose constant term is not a unit over the integers.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A Dirichlet or composition sum whose convergence precondition fails.
class Divergent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The request is well formed but exceeds the configured computation limits.
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace compoq

#endif
