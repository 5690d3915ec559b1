#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace picc {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap (degree, element enumeration, subgroup enumeration,
// quotient degree) would be exceeded. Never a silent truncation.
class ResourceLimit : public Error {
 public:
  ResourceLimit(std::string cap, std::string detail)
      : Error(cap + " exceeded: " + detail), cap_(std::move(cap)) {}
  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotMember : public Error {
 public:
  using Error::Error;
};

// An operation was called outside the hypotheses it is defined under.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace picc
