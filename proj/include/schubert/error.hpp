#ifndef SCHUBERT_ERROR_HPP
#define SCHUBERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace schubert {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (bad permutation word, wrong preconditions).
struct InputError : Error {
  using Error::Error;
};

/// A configured resource cap (sweep size, edge count, lattice budget) was hit.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace schubert

#endif
