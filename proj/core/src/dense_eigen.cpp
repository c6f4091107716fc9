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

#include "dense_eigen.hpp"

#include <cmath>
#include <complex>

#include "heatnet/error.hpp"

namespace heatnet::detail {

namespace {

template <class Real>
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Parlett-Reinsch balancing: powers of two d_i with D^-1 C D having
// comparable row and column norms. Exact in floating point.
template <class Real>
Vec<Real> balance(Mat<Real>& c) {
    using std::abs;
    const Eigen::Index n = c.rows();
    Vec<Real> d = Vec<Real>::Ones(n);
    for (bool changed = true; changed;) {
        changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Real col = c.col(i).cwiseAbs().sum() - abs(c(i, i));
            const Real row = c.row(i).cwiseAbs().sum() - abs(c(i, i));
            if (col == 0 || row == 0) continue;
            Real f = 1, cc = col, rr = row;
            const Real total = col + row;
            while (cc < rr / 2) {
                cc *= 2;
                rr /= 2;
                f *= 2;
            }
            while (cc >= rr * 2) {
                cc /= 2;
                rr *= 2;
                f /= 2;
            }
            if (cc + rr < Real(0.95) * total) {
                d[i] *= f;
                c.row(i) /= f;
                c.col(i) *= f;
                changed = true;
            }
        }
    }
    return d;
}

template <class Real>
DenseEigen solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    using Complex = std::complex<Real>;
    Mat<Real> c = b.cast<Real>().partialPivLu().solve(a.cast<Real>());
    const Vec<Real> d = balance(c);
    Eigen::EigenSolver<Mat<Real>> es(c, true);
    if (es.info() != Eigen::Success)
        fail(ErrorCode::DegeneratePencil, "real Schur iteration did not converge");
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic> v =
        d.template cast<Complex>().asDiagonal() * es.eigenvectors();
    for (Eigen::Index j = 0; j < v.cols(); ++j) v.col(j).normalize();

    DenseEigen out;
    out.values = es.eigenvalues().template cast<std::complex<double>>();
    out.right = v.template cast<std::complex<double>>();
    return out;
}

}  // namespace

DenseEigen eig_pencil(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, bool extended) {
    return extended ? solve<long double>(a, b) : solve<double>(a, b);
}

}  // namespace heatnet::detail
