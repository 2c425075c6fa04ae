#pragma once

#include <stdexcept>

namespace cofilt {

// Raised for mathematically undefined inputs, e.g. 0^a with Re(a) <= 0.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mismatched shapes or lengths between arguments.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file contents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cofilt
