#pragma once

#include <stdexcept>

namespace harmolift {

/// An iterative evaluation hit its iteration cap before converging.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point or stencil left the region where a function is known accurately.
class AccuracyRegionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace harmolift
