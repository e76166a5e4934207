#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubicsym {

// Malformed input or violated precondition. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic outside its domain: inverse of zero, conductor mismatch, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t partial, std::size_t cap)
      : std::runtime_error("group closure exceeded cap " + std::to_string(cap) + " after " +
                           std::to_string(partial) + " elements"),
        partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

}  // namespace cubicsym
