#pragma once

#include <stdexcept>
#include <string>

namespace leakgame {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad distributions, label mismatches,
// unparseable files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed (singular system, LP breakdown).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// The described system cannot be modelled, e.g. an isolated Crowds initiator.
class ModelingError : public Error {
 public:
  using Error::Error;
};

// A measure declared convex failed a convexity spot-check.
class ConvexityError : public Error {
 public:
  using Error::Error;
};

}  // namespace leakgame
