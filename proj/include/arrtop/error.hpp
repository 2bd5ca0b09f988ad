#pragma once

#include <stdexcept>
#include <string>

namespace arrtop {

/// Base of all library failures. Each subclass corresponds to one CLI exit
/// code (see tools/arrtop_main.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (files, curve expressions, parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A genericity certificate could not be produced or failed re-verification.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagree.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// The polar engine met an atypical locus that is not rational.
class IrrationalError : public Error {
 public:
  IrrationalError(const std::string& what, std::string factor)
      : Error(what), factor_(std::move(factor)) {}
  const std::string& factor() const { return factor_; }

 private:
  std::string factor_;
};

}  // namespace arrtop
