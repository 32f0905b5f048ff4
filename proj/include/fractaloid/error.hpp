#pragma once

#include <stdexcept>
#include <string>

namespace fractaloid {

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// Malformed graph data: dangling endpoints, duplicate ids, letters that do
// not belong to the graph they are used with.
class StructuralError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "structural"; }
};

// A vertex or edge name that is not declared in the graph.
class LookupError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "lookup"; }
};

// A numeric argument outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parameter"; }
};

// A configured computation cap (states, nodes, paths) would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "limit"; }
};

// The input does not satisfy a mathematical precondition, e.g. a
// fractal pair requested for a non-fractal graph.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// The input is outside what the library handles at all (disconnected
// graphs for fractality questions).
class ScopeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "scope"; }
};

}  // namespace fractaloid
