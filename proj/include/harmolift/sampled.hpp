#pragma once

#include <functional>

#include "harmolift/jet.hpp"

namespace harmolift {

/// A caller-supplied evaluator on the upper half-plane with its pointwise
/// accuracy, valid for Im z >= min_y.
struct SampledFunction {
  std::function<cplx(const UhpPoint&)> eval;
  double accuracy{1e-12};
  double min_y{0.0};

  cplx operator()(const UhpPoint& z) const { return eval(z); }
};

}  // namespace harmolift
