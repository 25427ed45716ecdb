#pragma once

#include <stdexcept>
#include <string>

namespace geodual {

// Every failure raised by the library derives from Error. The three leaves
// map one-to-one onto the CLI exit codes 1, 2 and 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: parse errors, universe mismatches, invalid arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but violates a semantic precondition of the
// requested operation (cyclic base, unranked base, non-geometry meets...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A post-hoc verification step disagreed with the produced result.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace geodual
