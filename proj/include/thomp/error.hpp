#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thomp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  explicit InvalidModulus(std::string const& what) : Error(what) {}
};

class InvalidPartition : public Error {
 public:
  explicit InvalidPartition(std::string const& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(std::string const& what) : Error(what) {}
};

class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(std::string const& what) : Error(what) {}
};

class NotInSubgroup : public Error {
 public:
  explicit NotInSubgroup(std::string const& what) : Error(what) {}
};

class MustReduce : public Error {
 public:
  explicit MustReduce(std::string const& what) : Error(what) {}
};

class TrivialElement : public Error {
 public:
  explicit TrivialElement(std::string const& what) : Error(what) {}
};

class SizeLimitExceeded : public Error {
 public:
  explicit SizeLimitExceeded(std::string const& what) : Error(what) {}
};

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(std::string const& what) : Error(what) {}
};

/// Malformed text input. position() is the 0-based byte offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace thomp
