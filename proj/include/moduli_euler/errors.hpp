#pragma once

#include <stdexcept>

namespace moduli_euler {

// A caller supplied inputs outside an operation's domain (even g to an
// odd-g formula, N not a multiple of q, g + s < 2, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A coefficient was requested beyond the retained order of a series.
class TruncationError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace moduli_euler
