#pragma once

#include <stdexcept>
#include <string>

namespace skyway {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its documented domain (negative payoff component,
// payload above the drone's maximum, deficit outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural invariant does not hold (bad network, bad config, bad file
// contents after a successful parse).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A leg cannot be flown on one charge.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Append-only FCFS schedule received an out-of-order arrival.
class OrderingError : public Error {
 public:
  using Error::Error;
};

// Scenario generation exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries path/line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace skyway
