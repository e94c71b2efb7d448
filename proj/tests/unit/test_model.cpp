// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "common/scenarios.hpp"
#include "uavwpt/error.hpp"
#include "uavwpt/model.hpp"

namespace uavwpt {
namespace {

using testing::defaults;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected uavwpt::Error";
  return ErrorCode::kIo;
}

TEST(ValidateScenario, DefaultParametersAreValid) {
  const auto p = defaults(30.0);
  EXPECT_EQ(classify_regime(p.scenario, p.limits), Regime::kValid);
  EXPECT_NO_THROW(validate_scenario(p.scenario, p.limits));
}

TEST(ValidateScenario, BeamTooNarrowToEverCoverBoth) {
  auto p = defaults(100.0);
  p.limits.theta_max = kPi / 4.0;  // tan = 1 < 100/60
  EXPECT_EQ(classify_regime(p.scenario, p.limits), Regime::kNeverCoversBoth);
  EXPECT_EQ(code_of([&] { validate_scenario(p.scenario, p.limits); }),
            ErrorCode::kRegimeViolation);
}

TEST(ValidateScenario, BeamAlwaysCoversBoth) {
  auto p = defaults(5.0);
  p.limits.theta_min = kPi / 3.0;  // tan ~ 1.732 > 0.5
  EXPECT_EQ(classify_regime(p.scenario, p.limits), Regime::kAlwaysCoversBoth);
  try {
    validate_scenario(p.scenario, p.limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRegimeViolation);
    EXPECT_NE(std::string(e.what()).find("always-covers-both"), std::string::npos);
  }
}

TEST(ValidateScenario, FieldInvariants) {
  auto p = defaults();
  p.scenario.separation = 0.0;
  EXPECT_EQ(code_of([&] { check_invariants(p.scenario); }), ErrorCode::kInvalidArgument);
  p = defaults();
  p.limits.h_max = 5.0;
  EXPECT_EQ(code_of([&] { check_invariants(p.limits); }), ErrorCode::kInvalidArgument);
  p = defaults();
  p.limits.theta_max = 2.0;
  EXPECT_EQ(code_of([&] { check_invariants(p.limits); }), ErrorCode::kInvalidArgument);
  p = defaults();
  p.radio.p_tx = -1.0;
  EXPECT_EQ(code_of([&] { check_invariants(p.radio); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { check_invariants(UavState{0.0, 0.0, 0.5}); }),
            ErrorCode::kInvalidArgument);
}

TEST(Scenario, ReceiverPositions) {
  const Scenario s{30.0, 20.0};
  EXPECT_DOUBLE_EQ(s.er_x(0), -15.0);
  EXPECT_DOUBLE_EQ(s.er_x(1), 15.0);
}

TEST(CoversEr, Examples) {
  EXPECT_TRUE(covers_er({0.0, 10.0, kPi / 4.0}, 5.0));
  EXPECT_FALSE(covers_er({0.0, 10.0, kPi / 6.0}, 10.0));
  EXPECT_TRUE(covers_er({7.0, 10.0, 1e-6}, 7.0));
}

TEST(AntennaGain, Examples) {
  const RadioParams radio{1e-3, 10.0};
  EXPECT_NEAR(antenna_gain_toward({0.0, 10.0, kPi / 6.0}, 0.0, radio), 8.333221541374257, 1e-12);
  EXPECT_EQ(antenna_gain_toward({0.0, 10.0, kPi / 6.0}, 10.0, radio), 0.0);
  EXPECT_DOUBLE_EQ(antenna_gain_toward({0.0, 10.0, 1.0}, 1.0, radio), radio.g0);
}

TEST(AntennaGain, DiscontinuityExactlyAtFootprintEdge) {
  const RadioParams radio{1e-3, 10.0};
  const double h = 10.0;
  const double theta = 0.7;
  const double edge = h * std::tan(theta);
  for (double side : {-1.0, 1.0}) {
    const double inside = 3.0 + side * edge * (1.0 - 1e-9);
    const double outside = 3.0 + side * edge * (1.0 + 1e-9);
    EXPECT_DOUBLE_EQ(antenna_gain_toward({inside, h, theta}, 3.0, radio), radio.g0 / (theta * theta));
    EXPECT_EQ(antenna_gain_toward({outside, h, theta}, 3.0, radio), 0.0);
    EXPECT_GT(antenna_gain_toward({3.0 + side * edge, h, theta}, 3.0, radio), 0.0);
  }
}

TEST(ReceivedPower, HoverAboveOneEr) {
  const auto p = defaults(30.0);
  const double q = received_power({15.0, 10.0, kPi / 6.0}, 15.0, p.radio);
  EXPECT_NEAR(q, 8.333221541374259e-4, 1e-15);
  EXPECT_EQ(received_power({15.0, 10.0, kPi / 6.0}, -15.0, p.radio), 0.0);
}

TEST(ReceivedPower, FactorsIntoPathLossAndGain) {
  const auto p = defaults();
  const UavState st{2.0, 12.0, 0.9};
  const double d2 = 4.0 + 144.0;
  EXPECT_DOUBLE_EQ(received_power(st, 0.0, p.radio),
                   p.radio.p_tx * (p.radio.beta0 / d2) * antenna_gain_toward(st, 0.0, p.radio));
  EXPECT_DOUBLE_EQ(received_power(st, 0.0, p.radio, GainModel::kOmni),
                   p.radio.beta0 * p.radio.p_tx / d2);
}

TEST(ReceivedPower, LinearInTransmitPowerAndBeta0) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const UavState st{-20.0 + 40.0 * u(rng), 5.0 + 25.0 * u(rng), 0.1 + 1.4 * u(rng)};
    RadioParams r{1e-3, 10.0};
    const double q = received_power(st, 0.0, r);
    EXPECT_GE(q, 0.0);
    RadioParams r2 = r;
    r2.p_tx *= 2.0;
    EXPECT_EQ(received_power(st, 0.0, r2), 2.0 * q);
    RadioParams r4 = r;
    r4.beta0 *= 4.0;
    EXPECT_EQ(received_power(st, 0.0, r4), 4.0 * q);
  }
}

TEST(ReceivedPower, DecreasingInAltitudeAndBeamwidthWhileCovered) {
  const RadioParams radio{1e-3, 10.0};
  const double x = 4.0;
  const double er = 0.0;
  double prev = received_power({x, 10.0, 1.2}, er, radio);
  for (double h = 10.5; h <= 30.0; h += 0.5) {
    const double q = received_power({x, h, 1.2}, er, radio);
    ASSERT_GT(q, 0.0);
    EXPECT_LT(q, prev);
    prev = q;
  }
  prev = received_power({x, 10.0, 0.4}, er, radio);
  for (double th = 0.45; th <= 1.5; th += 0.05) {
    const double q = received_power({x, 10.0, th}, er, radio);
    ASSERT_GT(q, 0.0);
    EXPECT_LT(q, prev);
    prev = q;
  }
}

TEST(Units, DecibelConversions) {
  EXPECT_NEAR(db_to_linear(-30.0), 1e-3, 1e-18);
  EXPECT_NEAR(dbm_to_watts(40.0), 10.0, 1e-12);
  EXPECT_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(dbm_to_watts(30.0), 1.0, 1e-15);
}

}  // namespace
}  // namespace uavwpt
