#pragma once

#include <stdexcept>
#include <string>

namespace surfcalc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two divisor classes live in different lattices.
class BasisMismatchError : public Error {
public:
  explicit BasisMismatchError(const std::string& what) : Error(what) {}
};

/// A curve, label, or config name does not resolve.
class UnknownNameError : public Error {
public:
  explicit UnknownNameError(const std::string& what) : Error(what) {}
};

/// An operation was called outside its mathematical domain
/// (non-integral class where integrality is required, NotT record, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A configuration violates a geometric precondition
/// (not negative definite, not a chain, intersecting branch, ...).
class GeometryError : public Error {
public:
  explicit GeometryError(const std::string& what) : Error(what) {}
};

/// Malformed user input: expression syntax, scenario schema, CLI arguments.
class InvalidInputError : public Error {
public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

} // namespace surfcalc
