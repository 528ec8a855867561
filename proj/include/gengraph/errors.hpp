#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gengraph {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group-spec text. `position()` is a 0-based byte offset.
class SpecError : public Error {
 public:
  SpecError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Invalid Cayley table, unreadable file, or order guard exceeded.
class GroupError : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("group is not nilpotent") {}
};

class NotTwoGenerated : public Error {
 public:
  NotTwoGenerated() : Error("group needs more than 2 generators") {}
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Observed value disagrees with a closed-form value that must hold.
class InternalMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace gengraph
