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

/// @file
/// Linearized polynomial eigenvalue problems for the damped network.
///
/// Finite cutoff: G(s) = (s + Lambda) g(s)^-1 with the cubic
///   g(s) = s^3 M + s^2 Lambda M + s (V + dV) + Lambda (V - dV),  dV = gamma0 Lambda P_T,
/// linearized to a symmetric 3K pencil. With A3 = M, A2 = Lambda M,
/// A1 = V + dV and A0 = Lambda (V - dV):
///   B = [[A3, 0, 0], [0, -A1, -A0], [0, -A0, 0]],
///   A = -[[A2, A1, A0], [A1, A0, 0], [A0, 0, 0]],
/// with eigenvectors z = (s^2 x, s x, x).
/// Infinite cutoff: G(s) = (s^2 M + V_R + 2 s gamma0 P_T)^-1, linearized to the
/// symmetric 2K pencil A = [[0, -V_R], [-V_R, -2 gamma0 P_T]], B = diag(-V_R, M).

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heatnet/network.hpp"

namespace heatnet {

using cdouble = std::complex<double>;

enum class PencilKind { Cubic, Quadratic };

struct LinearPencil {
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;
    PencilKind kind = PencilKind::Quadratic;
    Eigen::Index block = 0;   ///< K
    double gamma0 = 0.0;
    double lambda = 0.0;      ///< cutoff; zero for the quadratic pencil
    /// Uncontacted sites (spanning the kernel of P_T), needed for the exact
    /// s = -Lambda eigenvalues of the cubic pencil.
    std::vector<int> free_sites;
};

/// All tolerances are relative to the spectral radius unless noted.
struct SolverTolerances {
    double stability = 1e-10;    ///< Re(s) must stay below -stability * radius
    double degeneracy = 1e-9;    ///< eigenvalues closer than this form a cluster
    double conjugate = 1e-8;     ///< conjugate-pair matching
    double lambda_pole = 1e-8;   ///< |s + Lambda| <= lambda_pole * Lambda
    double bilinear = 1e-12;     ///< |r^T B r| floor, relative to |r|^2 |B|
    /// Pencils up to this dimension are diagonalized in long double.
    Eigen::Index extended_precision_limit = 96;
};

/// Generalized modes of a linearized pencil.
///
/// Pencil eigenvectors are normalized with Z^T B Z = 1. Columns of `right`
/// are r_alpha = x_alpha and `left` holds l_alpha, so that the inverse
/// polynomial equals sum r l^H / (s - s_alpha). For the quadratic pencil
/// l_alpha = conj(r_alpha); for the cubic one l_alpha = conj(s_alpha^2 x_alpha).
struct ModeSet {
    PencilKind kind = PencilKind::Quadratic;
    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd right;
    Eigen::MatrixXcd left;
    std::vector<int> conjugate_partner;
    std::vector<int> lambda_pole_indices;
    std::vector<bool> lambda_pole;
    double gamma0 = 0.0;
    double lambda = 0.0;
    double spectral_radius = 0.0;

    Eigen::Index size() const noexcept { return right.rows(); }
    Eigen::Index mode_count() const noexcept { return eigenvalues.size(); }
    /// omega_alpha = -i s_alpha; all lie in the upper half plane.
    Eigen::VectorXcd poles() const;
};

LinearPencil assemble_cubic(const HarmonicNetwork& network, const ReservoirSet& reservoirs);
LinearPencil assemble_quadratic(const HarmonicNetwork& network, const ReservoirSet& reservoirs);
/// Picks the cubic or the quadratic pencil from the reservoir cutoff.
LinearPencil assemble_pencil(const HarmonicNetwork& network, const ReservoirSet& reservoirs);

ModeSet solve_modes(const LinearPencil& pencil, const SolverTolerances& tol = {});
ModeSet solve_modes(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                    const SolverTolerances& tol = {});

/// det(s B - A).
cdouble pencil_determinant(const LinearPencil& pencil, cdouble s);

/// g(s) for a finite cutoff, G(s)^-1 = s^2 M + V_R + 2 s gamma0 P_T otherwise.
Eigen::MatrixXcd matrix_polynomial(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                                   cdouble s);

/// Laplace-domain Green's function from the spectral sum.
Eigen::MatrixXcd green_at(const ModeSet& modes, cdouble s);
/// Same quantity by direct inversion of G(s)^-1; used as the independent route.
Eigen::MatrixXcd green_direct(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                              cdouble s);

/// One line per mode: Re s, Im s, then Re/Im pairs of the components of r.
std::string dump_modes(const ModeSet& modes);

/// Normal modes of the isolated network: V_R q = Omega^2 M q, q^T M q = 1.
struct ClosedModes {
    Eigen::VectorXd frequencies;     ///< ascending
    Eigen::MatrixXd vectors;         ///< columns are the M-orthonormal q0_alpha
    Eigen::VectorXd decay_rates;     ///< Gamma_alpha, filled by perturb_modes
    Eigen::MatrixXcd corrections;    ///< first-order change of q0_alpha on the Omega + i Gamma branch
    std::vector<bool> undamped;
    double gamma0 = 0.0;
    double max_mixing = 0.0;         ///< largest first-order mixing coefficient
    bool perturbed = false;

    Eigen::Index size() const noexcept { return frequencies.size(); }
};

struct PerturbationOptions {
    double degeneracy = 1e-9;   ///< relative frequency spacing treated as exact degeneracy
    double max_mixing = 1.0;    ///< above this the expansion is rejected
};

ClosedModes closed_modes(const HarmonicNetwork& network);

/// First order in gamma0: Gamma_alpha = gamma0 q0^T P_T q0 and the vector
/// corrections. Exactly degenerate frequencies are rotated so every P_l is
/// diagonal inside the degenerate subspace.
ClosedModes perturb_modes(const ClosedModes& closed, const ReservoirSet& reservoirs,
                          const PerturbationOptions& options = {});

}  // namespace heatnet
