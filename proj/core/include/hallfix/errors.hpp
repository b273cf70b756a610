#ifndef HALLFIX_ERRORS_HPP
#define HALLFIX_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallfix {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  RepeatedPoint,
  PointOutOfRange,
  MalformedParentheses,
  InvalidToken,
  MalformedFile,
};

class ParseError : public Error {
public:
  ParseError(ParseErrorKind kind, std::string const &message)
  : Error(message), _kind(kind)
  {}

  ParseErrorKind kind() const noexcept { return _kind; }

private:
  ParseErrorKind _kind;
};

/// The group (or tuple space) is larger than exhaustive mode allows.
class CapExceeded : public Error {
public:
  CapExceeded(std::string const &what_, std::uint64_t cap)
  : Error(what_ + " exceeds cap " + std::to_string(cap)), _cap(cap)
  {}

  std::uint64_t cap() const noexcept { return _cap; }

private:
  std::uint64_t _cap;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A theorem's hypothesis does not hold for the given input.
class NotApplicable : public Error {
public:
  using Error::Error;
};

/// The group has no subgroup whose order is the pi-part of its order.
class NoHallSubgroup : public NotApplicable {
public:
  using NotApplicable::NotApplicable;
};

} // namespace hallfix

#endif // HALLFIX_ERRORS_HPP
