#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace submul {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: invalid parameters, dimension mismatch, malformed files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A closure or enumeration would exceed its configured size limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial, std::size_t cap)
      : Error(what + " (reached " + std::to_string(partial) + ", cap " + std::to_string(cap) + ")"),
        partial_(partial),
        cap_(cap) {}

  std::size_t partial() const noexcept { return partial_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t partial_;
  std::size_t cap_;
};

}  // namespace submul
