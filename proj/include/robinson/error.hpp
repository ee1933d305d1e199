#pragma once

#include <stdexcept>
#include <string>

namespace robinson {

// Malformed or inconsistent input (bad dimensions, invalid trees, parse errors).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well-formed but violates an algorithm's stated premise
// (asymmetric space where symmetry is required, non-Robinson tree paths, ...).
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// An exhaustive search refused to run because the instance exceeds its size guard.
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace robinson
