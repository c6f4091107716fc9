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

#include "heatnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dense_eigen.hpp"
#include "heatnet/error.hpp"
#include "heatnet/output.hpp"

namespace heatnet {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

Eigen::VectorXcd ModeSet::poles() const { return cdouble(0.0, -1.0) * eigenvalues; }

namespace {

std::vector<int> uncontacted_sites(const ReservoirSet& reservoirs, Index k) {
    std::vector<bool> touched(static_cast<std::size_t>(k), false);
    for (const auto& c : reservoirs.contacts)
        for (int i : c) touched[static_cast<std::size_t>(i)] = true;
    std::vector<int> out;
    for (Index i = 0; i < k; ++i)
        if (!touched[static_cast<std::size_t>(i)]) out.push_back(static_cast<int>(i));
    return out;
}

MatrixXd symmetrized(const MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// Minimal union-find for eigenvalue clustering.
struct Clusters {
    std::vector<int> parent;
    explicit Clusters(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

// Orthonormal basis of the span of the columns; throws if they are dependent.
MatrixXcd orthonormal_span(const MatrixXcd& x, const char* what) {
    Eigen::ColPivHouseholderQR<MatrixXcd> qr(x);
    qr.setThreshold(1e-8);
    if (qr.rank() < x.cols())
        fail(ErrorCode::DegeneratePencil,
             std::string("defective eigenvalue cluster (") + what + " vectors are dependent)");
    return qr.householderQ() * MatrixXcd::Identity(x.rows(), x.cols());
}

}  // namespace

LinearPencil assemble_cubic(const HarmonicNetwork& network, const ReservoirSet& reservoirs) {
    require_valid(network, reservoirs);
    if (reservoirs.cutoff.is_infinite())
        fail(ErrorCode::InvalidArgument, "cubic pencil needs a finite cutoff");
    const Index k = network.size();
    const double lam = reservoirs.cutoff.value();
    const double g = reservoirs.gamma0;
    const MatrixXd m = symmetrized(network.mass());
    const MatrixXd vr = symmetrized(network.potential());
    const MatrixXd pt = reservoirs.total_projector(k);
    const MatrixXd id = MatrixXd::Identity(k, k);

    LinearPencil p;
    p.kind = PencilKind::Cubic;
    p.block = k;
    p.gamma0 = g;
    p.lambda = lam;
    p.free_sites = uncontacted_sites(reservoirs, k);
    // Symmetric linearization of s^3 A3 + s^2 A2 + s A1 + A0 with eigenvectors
    // z = (s^2 x, s x, x).
    const MatrixXd a2 = lam * m;
    const MatrixXd a1 = vr + 2.0 * g * lam * pt;
    const MatrixXd a0 = lam * vr;
    p.b = MatrixXd::Zero(3 * k, 3 * k);
    p.b.block(0, 0, k, k) = m;
    p.b.block(k, k, k, k) = -a1;
    p.b.block(k, 2 * k, k, k) = -a0;
    p.b.block(2 * k, k, k, k) = -a0;
    p.a = MatrixXd::Zero(3 * k, 3 * k);
    p.a.block(0, 0, k, k) = -a2;
    p.a.block(0, k, k, k) = -a1;
    p.a.block(k, 0, k, k) = -a1;
    p.a.block(0, 2 * k, k, k) = -a0;
    p.a.block(2 * k, 0, k, k) = -a0;
    p.a.block(k, k, k, k) = -a0;
    return p;
}

LinearPencil assemble_quadratic(const HarmonicNetwork& network, const ReservoirSet& reservoirs) {
    require_valid(network, reservoirs);
    const Index k = network.size();
    const double g = reservoirs.gamma0;
    const MatrixXd m = symmetrized(network.mass());
    const MatrixXd vr = symmetrized(network.potential());

    LinearPencil p;
    p.kind = PencilKind::Quadratic;
    p.block = k;
    p.gamma0 = g;
    p.a = MatrixXd::Zero(2 * k, 2 * k);
    p.a.block(0, k, k, k) = -vr;
    p.a.block(k, 0, k, k) = -vr;
    p.a.block(k, k, k, k) = -2.0 * g * reservoirs.total_projector(k);
    p.b = MatrixXd::Zero(2 * k, 2 * k);
    p.b.block(0, 0, k, k) = -vr;
    p.b.block(k, k, k, k) = m;
    return p;
}

LinearPencil assemble_pencil(const HarmonicNetwork& network, const ReservoirSet& reservoirs) {
    return reservoirs.cutoff.is_infinite() ? assemble_quadratic(network, reservoirs)
                                           : assemble_cubic(network, reservoirs);
}

ModeSet solve_modes(const LinearPencil& pencil, const SolverTolerances& tol) {
    const Index k = pencil.block;
    const Index n = pencil.a.rows();
    if (k <= 0 || n % k != 0 || pencil.b.rows() != n)
        fail(ErrorCode::InvalidArgument, "malformed pencil");
    const bool cubic = pencil.kind == PencilKind::Cubic;

    const detail::DenseEigen eig =
        detail::eig_pencil(pencil.a, pencil.b, n <= tol.extended_precision_limit);
    VectorXcd s = eig.values;

    ModeSet out;
    out.kind = pencil.kind;
    out.gamma0 = pencil.gamma0;
    out.lambda = pencil.lambda;
    out.spectral_radius = s.cwiseAbs().maxCoeff();
    const double rho = out.spectral_radius;

    for (Index i = 0; i < n; ++i)
        if (!(s[i].real() < -tol.stability * rho))
            fail(ErrorCode::UndampedMode, "eigenvalue with Re(s) = " + format_double(s[i].real()) +
                                              " is not damped");

    const int nn = static_cast<int>(n);
    std::vector<bool> at_lambda(static_cast<std::size_t>(n), false);
    if (cubic) {
        const auto d = static_cast<Index>(pencil.free_sites.size());
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return std::abs(s[x] + pencil.lambda) < std::abs(s[y] + pencil.lambda);
        });
        const double window = tol.lambda_pole * pencil.lambda;
        for (Index j = 0; j < d; ++j)
            if (std::abs(s[order[j]] + pencil.lambda) > window)
                fail(ErrorCode::DegeneratePencil,
                     "pole cluster at s = -Lambda has fewer members than uncontacted sites");
        if (d < n && std::abs(s[order[d]] + pencil.lambda) <= tol.degeneracy * rho)
            fail(ErrorCode::DegeneratePencil,
                 "an extra eigenvalue coincides with the s = -Lambda cluster");
        for (Index j = 0; j < d; ++j) at_lambda[order[j]] = true;
    }

    // Conjugate partners.
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < nn; ++i) {
        if (partner[i] >= 0) continue;
        if (at_lambda[i] || std::abs(s[i].imag()) <= tol.conjugate * rho) {
            partner[i] = i;
            continue;
        }
        int best = -1;
        double dist = 0.0;
        for (int j = 0; j < nn; ++j) {
            if (j == i || partner[j] >= 0 || at_lambda[j]) continue;
            const double dd = std::abs(s[j] - std::conj(s[i]));
            if (best < 0 || dd < dist) best = j, dist = dd;
        }
        if (best < 0 || dist > tol.conjugate * rho)
            fail(ErrorCode::UnmatchedConjugate,
                 "eigenvalue " + format_double(s[i].real()) + " + " + format_double(s[i].imag()) +
                     "i has no conjugate partner");
        partner[i] = best;
        partner[best] = i;
    }

    // Groups: the s = -Lambda cluster plus degeneracy clusters of the rest.
    Clusters uf(nn);
    for (int i = 0; i < nn; ++i) {
        if (at_lambda[i]) continue;
        for (int j = i + 1; j < nn; ++j)
            if (!at_lambda[j] && std::abs(s[i] - s[j]) <= tol.degeneracy * rho) uf.join(i, j);
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    {
        std::vector<int> root_group(static_cast<std::size_t>(n), -1);
        std::vector<int> lam_members;
        for (int i = 0; i < nn; ++i) {
            if (at_lambda[i]) {
                lam_members.push_back(i);
                continue;
            }
            const int r = uf.find(i);
            if (root_group[r] < 0) {
                root_group[r] = static_cast<int>(groups.size());
                groups.emplace_back();
            }
            groups[root_group[r]].push_back(i);
            group_of[i] = root_group[r];
        }
        if (!lam_members.empty()) {
            for (int i : lam_members) group_of[i] = static_cast<int>(groups.size());
            groups.push_back(lam_members);
        }
    }

    const MatrixXd bm = pencil.b;
    const double bnorm = bm.cwiseAbs().rowwise().sum().maxCoeff();

    // Both pencils are symmetric, so left eigenvectors are transposes of the
    // right ones once normalized with z^T B z = 1.
    MatrixXcd zr(k, n);  // the component carrying x
    MatrixXcd zl(k, n);  // the component paired with it in g(s)^-1
    std::vector<bool> done(groups.size(), false);

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        if (done[gi]) continue;
        const auto& mem = groups[gi];
        const auto m = static_cast<Index>(mem.size());
        const bool is_lambda = at_lambda[mem.front()];
        const int conj_group = is_lambda ? static_cast<int>(gi) : group_of[partner[mem.front()]];
        if (!is_lambda && static_cast<Index>(groups[conj_group].size()) != m)
            fail(ErrorCode::UnmatchedConjugate, "conjugate clusters differ in size");

        if (is_lambda) {
            for (int i : mem) s[i] = -pencil.lambda;
        } else if (m > 1) {
            cdouble mean = 0.0;
            for (int i : mem) mean += s[i];
            mean /= static_cast<double>(m);
            if (conj_group == static_cast<int>(gi)) mean = mean.real();
            for (int i : mem) s[i] = mean;
        } else if (conj_group == static_cast<int>(gi)) {
            s[mem.front()] = s[mem.front()].real();
        }

        MatrixXcd zc = MatrixXcd::Zero(n, m);
        if (is_lambda) {
            const double lam = pencil.lambda;
            for (Index j = 0; j < m; ++j) {
                const int site = pencil.free_sites[static_cast<std::size_t>(j)];
                zc(site, j) = lam * lam;
                zc(k + site, j) = -lam;
                zc(2 * k + site, j) = 1.0;
            }
        } else {
            for (Index j = 0; j < m; ++j) zc.col(j) = eig.right.col(mem[j]);
            if (m > 1) zc = orthonormal_span(zc, "right");
        }
        // Bilinear Gram-Schmidt with pivoting on |z^T B z|.
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        MatrixXcd basis(n, m);
        for (Index j = 0; j < m; ++j) {
            Index pick = -1;
            double best = -1.0;
            cdouble best_norm = 0.0;
            Eigen::VectorXcd best_v;
            for (Index c2 = 0; c2 < m; ++c2) {
                if (used[c2]) continue;
                Eigen::VectorXcd v = zc.col(c2);
                for (Index i = 0; i < j; ++i)
                    v -= (basis.col(i).transpose() * bm * v).value() * basis.col(i);
                const cdouble nb = (v.transpose() * bm * v).value();
                if (std::abs(nb) / (v.squaredNorm() * bnorm) > best) {
                    best = std::abs(nb) / (v.squaredNorm() * bnorm);
                    pick = c2;
                    best_norm = nb;
                    best_v = v;
                }
            }
            if (!(best >= tol.bilinear))
                fail(ErrorCode::DegeneratePencil,
                     "eigenvector is self-orthogonal in the bilinear form");
            used[pick] = true;
            basis.col(j) = best_v / std::sqrt(best_norm);
        }
        for (Index j = 0; j < m; ++j) {
            zl.col(mem[j]) = basis.col(j).head(k);
            zr.col(mem[j]) = cubic ? basis.col(j).tail(k) : basis.col(j).head(k);
        }
        done[gi] = true;

        if (conj_group != static_cast<int>(gi)) {
            const auto& other = groups[conj_group];
            for (Index j = 0; j < m; ++j) {
                s[other[j]] = std::conj(s[mem[j]]);
                zr.col(other[j]) = zr.col(mem[j]).conjugate();
                zl.col(other[j]) = zl.col(mem[j]).conjugate();
            }
            done[conj_group] = true;
        }
    }

    out.eigenvalues = s;
    out.conjugate_partner = partner;
    out.lambda_pole = at_lambda;
    for (int i = 0; i < nn; ++i)
        if (at_lambda[i]) out.lambda_pole_indices.push_back(i);
    out.right = zr;
    out.left = zl.conjugate();
    return out;
}

ModeSet solve_modes(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                    const SolverTolerances& tol) {
    return solve_modes(assemble_pencil(network, reservoirs), tol);
}

cdouble pencil_determinant(const LinearPencil& pencil, cdouble s) {
    const MatrixXcd m = s * pencil.b.cast<cdouble>() - pencil.a.cast<cdouble>();
    return m.partialPivLu().determinant();
}

Eigen::MatrixXcd matrix_polynomial(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                                   cdouble s) {
    const Index k = network.size();
    const MatrixXcd m = network.mass().cast<cdouble>();
    const MatrixXcd vr = network.potential().cast<cdouble>();
    const MatrixXcd pt = reservoirs.total_projector(k).cast<cdouble>();
    const double g = reservoirs.gamma0;
    if (reservoirs.cutoff.is_infinite()) return s * s * m + vr + 2.0 * s * g * pt;
    const double lam = reservoirs.cutoff.value();
    const MatrixXcd dv = g * lam * pt;
    return s * s * s * m + s * s * lam * m + s * (vr + 2.0 * dv) + lam * vr;
}

Eigen::MatrixXcd green_at(const ModeSet& modes, cdouble s) {
    const Index n = modes.mode_count();
    for (Index a = 0; a < n; ++a)
        if (std::abs(s - modes.eigenvalues[a]) <= 1e-12 * std::max(1.0, modes.spectral_radius))
            fail(ErrorCode::PoleEvaluation, "Green's function evaluated at a pole");
    VectorXcd w(n);
    if (modes.kind == PencilKind::Cubic) {
        for (Index a = 0; a < n; ++a) w[a] = (s + modes.lambda) / (s - modes.eigenvalues[a]);
        return modes.right * w.asDiagonal() * modes.left.adjoint();
    }
    for (Index a = 0; a < n; ++a) w[a] = modes.eigenvalues[a] / (s - modes.eigenvalues[a]);
    return modes.right * w.asDiagonal() * modes.right.transpose();
}

Eigen::MatrixXcd green_direct(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                              cdouble s) {
    const MatrixXcd p = matrix_polynomial(network, reservoirs, s);
    const Index k = network.size();
    MatrixXcd inv = p.partialPivLu().solve(MatrixXcd::Identity(k, k));
    if (!reservoirs.cutoff.is_infinite()) inv *= (s + reservoirs.cutoff.value());
    return inv;
}

std::string dump_modes(const ModeSet& modes) {
    std::ostringstream os;
    for (Index a = 0; a < modes.mode_count(); ++a) {
        os << format_double(modes.eigenvalues[a].real()) << ' '
           << format_double(modes.eigenvalues[a].imag());
        for (Index i = 0; i < modes.size(); ++i)
            os << ' ' << format_double(modes.right(i, a).real()) << ' '
               << format_double(modes.right(i, a).imag());
        os << '\n';
    }
    return os.str();
}

}  // namespace heatnet
