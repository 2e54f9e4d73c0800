#pragma once

#include <stdexcept>
#include <string>

namespace ncg {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters (torus dimensions, label collisions).
class ParamError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ViewTooLarge : public Error {
 public:
  ViewTooLarge(std::size_t size, std::size_t cap)
      : Error("view has " + std::to_string(size) +
              " vertices, exact Sum solver cap is " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class MaxAttemptsExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ncg
