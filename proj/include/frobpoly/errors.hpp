#pragma once
// Error taxonomy shared by the whole library.  Each class corresponds to one
// CLI exit code so failures surface with a stable, scriptable meaning:
//   SpecError        -> 2  (invalid or inconsistent input data)
//   CyclicExhausted  -> 3  (cyclic-vector search ran out of candidates)
//   BadPointError    -> 4  (evaluation point hits a forbidden locus)
//   CapExceeded      -> 5  (a configured size/degree cap was reached)
// InternalError marks identities that the construction forces; seeing one is a
// bug report, not a user error.

#include <stdexcept>
#include <string>

namespace frobpoly {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SpecError : public Error {
 public:
  explicit SpecError(const std::string& msg) : Error(msg) {}
};

class CyclicExhausted : public Error {
 public:
  explicit CyclicExhausted(const std::string& msg) : Error(msg) {}
};

class BadPointError : public Error {
 public:
  explicit BadPointError(const std::string& msg) : Error(msg) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace frobpoly
