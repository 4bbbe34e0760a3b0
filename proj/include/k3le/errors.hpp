#pragma once

#include <stdexcept>
#include <string>

namespace k3le {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Integer arithmetic left the range of Int.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DegenerateLattice : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured enumeration or group-order budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A Dynkin sub-diagram whose shape is not a finite ADE type.
class NotClassifiable : public Error {
 public:
  using Error::Error;
};

class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace k3le
