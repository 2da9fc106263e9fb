#pragma once

#include <stdexcept>
#include <string>

namespace ybfuse {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSites : public Error {
 public:
  using Error::Error;
};

class InvalidDeformationParameter : public Error {
 public:
  using Error::Error;
};

class InvalidTableau : public Error {
 public:
  using Error::Error;
};

}  // namespace ybfuse
