#pragma once

#include <stdexcept>
#include <string>

namespace gsec {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration requested on a host graph larger than the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A demand vector violates |d_v| <= Q (or d_v <= Q for capacity families).
class InvalidDemand : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

/// A set function exceeds |S| somewhere, so it cannot produce an RHS table.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree (characterization vs enumeration, solver vs oracle)
/// disagreed. Always a bug, never swallowed.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// An integer VRP vector that does not decompose into depot cycles.
class MalformedX : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsec
