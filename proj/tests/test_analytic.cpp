#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lz/analytic.hpp"
#include "lz/errors.hpp"

using namespace lz;

TEST_CASE("prediction at the reference points") {
  {
    const LZPrediction p = lz_prediction(Gamma{0.0});
    CHECK(p.amplitude == 1.0);
    CHECK(p.survival == 1.0);
    CHECK(p.transition == 0.0);
  }
  {
    const LZPrediction p = lz_prediction(Gamma{1.0});
    CHECK(p.survival == doctest::Approx(std::exp(-std::numbers::pi)).epsilon(1e-15));
    CHECK(p.survival == doctest::Approx(0.04321391826377224).epsilon(1e-14));
  }
  {
    // adiabatic limit
    const LZPrediction p = lz_prediction(Gamma{200.0});
    CHECK(p.survival <= 1e-250);
    CHECK(p.transition == 1.0);
  }
  CHECK_THROWS_AS(lz_prediction(Gamma{-0.5}), validation_error);
}

TEST_CASE("internal identities hold exactly") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> gd(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const LZPrediction p = lz_prediction(Gamma{gd(rng)});
    CHECK(p.survival == p.amplitude * p.amplitude);
    CHECK(p.survival + p.transition == 1.0);
    CHECK(p.amplitude >= 0.0);
    CHECK(p.amplitude <= 1.0);
    CHECK(p.survival <= 1.0);
    CHECK(p.transition >= 0.0);
    CHECK(p.transition <= 1.0);
  }
}

TEST_CASE("survival satisfies the exponential functional equation") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> gd(0.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    const double g1 = gd(rng), g2 = gd(rng);
    const double lhs = lz_prediction(Gamma{g1 + g2}).survival;
    const double rhs = lz_prediction(Gamma{g1}).survival * lz_prediction(Gamma{g2}).survival;
    CHECK(std::abs(lhs - rhs) <= 1e-14 * rhs);
  }
}

TEST_CASE("survival is monotone decreasing in gamma") {
  double prev = 2.0;
  for (double g = 0.0; g <= 8.0; g += 0.125) {
    const double s = lz_prediction(Gamma{g}).survival;
    CHECK(s < prev);
    prev = s;
  }
}
