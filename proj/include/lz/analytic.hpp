#pragma once

#include "lz/model.hpp"

namespace lz {

// Closed-form asymptotic results for the linear sweep; used as the oracle
// for every numerical route.
struct LZPrediction {
  double gamma;
  double amplitude;   // e^{-pi gamma / 2}
  double survival;    // e^{-pi gamma}
  double transition;  // 1 - e^{-pi gamma}
};

LZPrediction lz_prediction(Gamma gamma);

}  // namespace lz
