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

#include "heatnet/digamma.hpp"

#include <cmath>
#include <numbers>

#include "heatnet/error.hpp"
#include "heatnet/output.hpp"

namespace heatnet {

namespace {

using cd = std::complex<double>;

// B_{2k} / (2k) for k = 1..8.
constexpr double kBernoulliOver2k[] = {
    1.0 / 12.0,          -1.0 / 120.0,         1.0 / 252.0,      -1.0 / 240.0,
    1.0 / 132.0,         -691.0 / 32760.0,     1.0 / 12.0,       -3617.0 / 8160.0,
};

cd asymptotic(cd z) {
    const cd inv2 = 1.0 / (z * z);
    cd series = 0.0;
    cd p = inv2;
    for (double c : kBernoulliOver2k) {
        series += c * p;
        p *= inv2;
    }
    return std::log(z) - 0.5 / z - series;
}

}  // namespace

std::complex<double> digamma(std::complex<double> z) {
    constexpr double pi = std::numbers::pi;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        fail(ErrorCode::InvalidArgument, "digamma of a non-finite argument");
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        fail(ErrorCode::DigammaPole, "digamma pole at z = " + format_double(z.real()));
    if (z.real() < 0.5) {
        // Reflection: psi(z) = psi(1 - z) - pi cot(pi z).
        const cd t = std::tan(pi * z);
        return digamma(1.0 - z) - pi / t;
    }
    cd shift = 0.0;
    while (z.real() < 8.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    return shift + asymptotic(z);
}

std::complex<double> thermal_digamma(std::complex<double> omega, double temperature) {
    if (temperature < 0.0) fail(ErrorCode::InvalidArgument, "negative temperature");
    if (temperature == 0.0) {
        if (omega == cd(0.0)) fail(ErrorCode::DivergentArgument, "log weight at omega = 0");
        return std::log(cd(0.0, -1.0) * omega);
    }
    return digamma(1.0 - cd(0.0, 1.0) * omega / (2.0 * std::numbers::pi * temperature));
}

double coth_digamma_residual(double omega, double temperature) {
    if (omega == 0.0) fail(ErrorCode::DivergentArgument, "coth weight at omega = 0");
    constexpr double pi = std::numbers::pi;
    const cd i(0.0, 1.0);
    const double x = omega / (2.0 * temperature);
    const double lhs = 1.0 / std::tanh(x);
    const cd a = i * omega / (2.0 * pi * temperature);
    const cd rhs = 2.0 * temperature / omega - digamma(1.0 - a) / (i * pi) + digamma(1.0 + a) / (i * pi);
    return std::abs(lhs - rhs);
}

}  // namespace heatnet
