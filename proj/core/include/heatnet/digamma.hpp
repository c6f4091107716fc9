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

#pragma once

#include <complex>

namespace heatnet {

/// Complex digamma. Throws DigammaPole at nonpositive integers.
std::complex<double> digamma(std::complex<double> z);

/// psi(1 - i omega / (2 pi T)) for omega in the upper half plane. At T = 0 the
/// divergent -log(2 pi T) is dropped and log(-i omega) is returned; constant
/// per-reservoir shifts cancel in every spectral sum that uses this weight.
std::complex<double> thermal_digamma(std::complex<double> omega, double temperature);

/// |coth(w/2T) - [2T/w - (1/i pi) psi(1 - i w/2 pi T) + (1/i pi) psi(1 + i w/2 pi T)]|.
double coth_digamma_residual(double omega, double temperature);

}  // namespace heatnet
