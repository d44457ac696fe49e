#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prerad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when explicit ring tables violate an axiom; carries every violation
// found, not only the first.
class RingAxiomError : public Error {
 public:
  explicit RingAxiomError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("objects are defined over different rings") {}
};

// Size guards and enumeration caps.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed ring, module, submodule or preradical specifications.
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace prerad
