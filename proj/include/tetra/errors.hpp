#pragma once

#include <stdexcept>
#include <string>

namespace tetra {

// A brute-force engine hit one of its configured resource limits.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(std::string cap, const std::string& detail)
      : std::runtime_error(cap + " cap exceeded: " + detail), cap_(std::move(cap)) {}

  const std::string& cap_name() const { return cap_; }

 private:
  std::string cap_;
};

// Two independent computations of the same quantity disagreed.
class VerificationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tetra
