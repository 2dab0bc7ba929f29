#pragma once

#include <stdexcept>
#include <string>

namespace oddcycle {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad endpoint, self-loop, bad parameter).
class InputError : public Error {
public:
  using Error::Error;
};

// A subgraph edge that is not present in its host.
class ContainmentError : public Error {
public:
  using Error::Error;
};

// (n,d,lambda) certification requested for a non-regular graph.
class CertificationError : public Error {
public:
  using Error::Error;
};

// Eigensolver failure or residual above tolerance.
class NumericError : public Error {
public:
  using Error::Error;
};

// A work or size budget was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Argument outside the mathematical domain of a formula (d = 0, empty X).
class DomainError : public Error {
public:
  using Error::Error;
};

// Random generation gave up after its restart budget.
class GenerationError : public Error {
public:
  using Error::Error;
};

// A vertex-deletion process produced an empty set.
class ExtractionError : public Error {
public:
  using Error::Error;
};

// A stated precondition on otherwise well-formed inputs does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace oddcycle
