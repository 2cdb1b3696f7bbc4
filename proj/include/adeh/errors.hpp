#pragma once

#include <stdexcept>
#include <string>

namespace adeh {

/// Caller passed something the operation's contract rejects (bad type string,
/// mismatched field orders, a non-root mirror, ...). The CLI maps it to exit 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic failure, e.g. inverting zero.
class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A mathematical invariant that must hold by construction was violated.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace adeh
