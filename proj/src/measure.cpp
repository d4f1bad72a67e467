#include "ccspace/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace ccspace {

Measure Measure::from_double(double value) {
  if (!std::isfinite(value) || std::fabs(value) > 1e6)
    throw std::invalid_argument("measure value out of representable range");
  return Measure(std::llround(value * static_cast<double>(kScale)));
}

}  // namespace ccspace
