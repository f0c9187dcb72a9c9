#ifndef SEGAL_ERRORS_HPP_
#define SEGAL_ERRORS_HPP_

#include <stdexcept>

namespace segal {

  // Thrown when an operation is called outside its domain (index out of
  // range, mismatched truncations, labels outside the object set, ...).
  class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Thrown when input data fails an eager validity check, e.g. a
  // multiplication table that is not associative.
  class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Thrown when a structure that is built and then self-checked (such as the
  // cosimplicial object of free monoids) fails its identities.
  class ConstructionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace segal

#endif  // SEGAL_ERRORS_HPP_
