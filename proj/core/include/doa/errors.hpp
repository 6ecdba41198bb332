#pragma once

#include <stdexcept>

namespace doa {

/// Invalid input or configuration detected on a public entry point.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure at run time: degeneracy, ill conditioning, solver
/// breakdown. Callers may treat these as per-item failures and continue.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace doa
