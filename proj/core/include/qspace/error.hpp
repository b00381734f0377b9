#pragma once

#include <stdexcept>
#include <string>

namespace qspace {

// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qspace
