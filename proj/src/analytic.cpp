#include "lz/analytic.hpp"

#include <cmath>
#include <numbers>

namespace lz {

LZPrediction lz_prediction(Gamma gamma) {
  LZPrediction p;
  p.gamma = gamma.value();
  p.amplitude = std::exp(-std::numbers::pi * gamma.value() / 2.0);
  p.survival = p.amplitude * p.amplitude;
  p.transition = 1.0 - p.survival;
  return p;
}

}  // namespace lz
