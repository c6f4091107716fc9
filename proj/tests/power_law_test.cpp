// Copyright 2026 The heatnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "heatnet/error.hpp"
#include "heatnet/power_law.hpp"

namespace heatnet {
namespace {

TEST(PowerLaw, ExactInverseLaw) {
    const PowerLawFit f = fit_power_law({{4, 7.0 / 4}, {8, 7.0 / 8}, {16, 7.0 / 16}, {32, 7.0 / 32}});
    EXPECT_NEAR(f.mu_fit, 1.0, 1e-13);
    EXPECT_NEAR(f.slope, -1.0, 1e-13);
    EXPECT_NEAR(f.std_error, 0.0, 1e-12);
    EXPECT_NEAR(std::exp(f.intercept), 7.0, 1e-12);
    EXPECT_EQ(f.points, 4u);
}

TEST(PowerLaw, ConstantFlux) {
    const PowerLawFit f = fit_power_law({{3, 2.5}, {4, 2.5}, {6, 2.5}});
    EXPECT_NEAR(f.mu_fit, 0.0, 1e-13);
}

TEST(PowerLaw, NoisyInverseSquare) {
    std::mt19937_64 gen(3);
    std::normal_distribution<double> noise(0.0, 0.01);
    std::vector<std::pair<double, double>> pts;
    for (double n : {4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0})
        pts.emplace_back(n, 3.0 / (n * n) * (1.0 + noise(gen)));
    const PowerLawFit f = fit_power_law(pts);
    EXPECT_NEAR(f.mu_fit, 2.0, 0.02);
    EXPECT_GT(f.std_error, 0.0);
    EXPECT_LT(f.std_error, 0.02);
}

TEST(PowerLaw, DomainErrors) {
    EXPECT_THROW(fit_power_law({{4, 1.0}, {8, 0.0}, {16, 1.0}}), Error);
    EXPECT_THROW(fit_power_law({{4, 1.0}, {8, -1.0}, {16, 1.0}}), Error);
    EXPECT_THROW(fit_power_law({{4, 1.0}, {4, 2.0}, {8, 1.0}}), Error);
    try {
        fit_power_law({{4, 1.0}, {8, -1.0}, {16, 1.0}});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FitDomain);
    }
}

}  // namespace
}  // namespace heatnet
