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

#include "heatnet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatnet/error.hpp"

namespace heatnet {

namespace {

// Kronrod abscissae (non-negative half) and weights; odd indices are the
// Gauss points.
constexpr double kX[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720, 0.0};
constexpr double kWK[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980498004, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr double kWG[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                           0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                           0.295524224714752870173892994651338};

// Cancellation in the rule sums limits what any subdivision can resolve.
constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();

struct Interval {
    double a, b;
    bool mapped;  // t-space [a, b] with w = c / t
    Eigen::VectorXd value, error;
    Eigen::VectorXd magnitude;  // integral of |f|, for the roundoff floor
};

class Integrator {
public:
    Integrator(const VectorIntegrand& f, Eigen::Index dim, double c) : f_(f), dim_(dim), c_(c) {}

    Interval rule(double a, double b, bool mapped) {
        const double h = 0.5 * (b - a), mid = 0.5 * (a + b);
        Eigen::MatrixXd v(dim_, 21);
        for (int j = 0, col = 0; j < 11; ++j) {
            const int reps = j == 10 ? 1 : 2;
            for (int s = 0; s < reps; ++s)
                v.col(col++) = eval(mid + (s == 0 ? 1.0 : -1.0) * h * kX[j], mapped);
        }
        Eigen::VectorXd k = Eigen::VectorXd::Zero(dim_), g = Eigen::VectorXd::Zero(dim_);
        Eigen::VectorXd mag = Eigen::VectorXd::Zero(dim_);
        for (int j = 0, col = 0; j < 11; ++j) {
            const int reps = j == 10 ? 1 : 2;
            for (int s = 0; s < reps; ++s, ++col) {
                k += kWK[j] * v.col(col);
                mag += kWK[j] * v.col(col).cwiseAbs();
                if (j % 2 == 1) g += kWG[j / 2] * v.col(col);
            }
        }
        // QUADPACK estimate: resasc * min(1, (200 |K - G| / resasc)^1.5).
        const Eigen::VectorXd mean = 0.5 * k;
        Eigen::VectorXd asc = Eigen::VectorXd::Zero(dim_);
        for (int j = 0, col = 0; j < 11; ++j) {
            const int reps = j == 10 ? 1 : 2;
            for (int s = 0; s < reps; ++s, ++col) asc += kWK[j] * (v.col(col) - mean).cwiseAbs();
        }
        const double ah = std::abs(h);
        Eigen::VectorXd err = (ah * (k - g)).cwiseAbs();
        for (Eigen::Index i = 0; i < dim_; ++i) {
            const double resasc = ah * asc[i];
            if (resasc > 0.0 && err[i] > 0.0)
                err[i] = resasc * std::min(1.0, std::pow(200.0 * err[i] / resasc, 1.5));
        }
        return Interval{a, b, mapped, h * k, err, ah * mag};
    }

    long evaluations() const { return evals_; }

private:
    Eigen::VectorXd eval(double x, bool mapped) {
        ++evals_;
        if (!mapped) return f_(x);
        const double w = c_ / x;
        return f_(w) * (c_ / (x * x));
    }

    const VectorIntegrand& f_;
    Eigen::Index dim_;
    double c_;
    long evals_ = 0;
};

}  // namespace

IntegrationResult integrate(const VectorIntegrand& f, Eigen::Index dimension,
                            std::vector<double> points, bool to_infinity,
                            const IntegrationOptions& options) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty() || (points.size() < 2 && !to_infinity))
        fail(ErrorCode::InvalidArgument, "integration range is empty");
    if (to_infinity && !(points.back() > 0.0))
        fail(ErrorCode::InvalidArgument, "a semi-infinite range must start above zero");

    std::vector<Eigen::Index> groups = options.group_sizes;
    if (groups.empty()) groups.push_back(dimension);
    Eigen::Index covered = 0;
    for (auto g : groups) covered += g;
    if (covered != dimension) fail(ErrorCode::InvalidArgument, "group sizes do not cover the vector");

    Integrator rule(f, dimension, to_infinity ? points.back() : 1.0);
    std::vector<Interval> live;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        live.push_back(rule.rule(points[i], points[i + 1], false));
    if (to_infinity) live.push_back(rule.rule(0.0, 1.0, true));

    IntegrationResult res;
    for (;;) {
        Eigen::VectorXd value = Eigen::VectorXd::Zero(dimension);
        Eigen::VectorXd error = Eigen::VectorXd::Zero(dimension);
        Eigen::VectorXd magnitude = Eigen::VectorXd::Zero(dimension);
        for (const auto& iv : live) {
            value += iv.value;
            error += iv.error;
            magnitude += iv.magnitude;
        }
        const Eigen::VectorXd whole =
            options.reference.size() == dimension ? Eigen::VectorXd(value + options.reference) : value;
        Eigen::VectorXd tol(dimension);
        Eigen::Index start = 0;
        std::vector<double> scales;
        if (options.group_scales) scales = options.group_scales(whole);
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const Eigen::Index g = groups[gi];
            const double scale = gi < scales.size()
                                     ? scales[gi]
                                     : (g ? whole.segment(start, g).cwiseAbs().maxCoeff() : 0.0);
            for (Eigen::Index i = start; i < start + g; ++i)
                tol[i] = std::max({options.rel_tol * std::abs(whole[i]),
                                   options.component_floor * scale, options.abs_tol,
                                   kRoundoff * magnitude[i], 1e-300});
            start += g;
        }
        const double worst = error.cwiseQuotient(tol).maxCoeff();
        res.value = value;
        res.error = error;
        res.intervals = static_cast<int>(live.size());
        if (worst <= 1.0) {
            res.converged = true;
            break;
        }
        if (static_cast<int>(live.size()) >= options.max_intervals) break;

        // Split every interval that holds more than its share of the excess.
        const double share = 1.0 / static_cast<double>(live.size());
        std::vector<Interval> next;
        next.reserve(live.size() * 2);
        bool split = false;
        for (auto& iv : live) {
            const double score = iv.error.cwiseQuotient(tol).maxCoeff() / worst;
            const double width = iv.b - iv.a;
            if (score >= share && width > 1e-15 * std::max(std::abs(iv.a), std::abs(iv.b))) {
                const double mid = 0.5 * (iv.a + iv.b);
                next.push_back(rule.rule(iv.a, mid, iv.mapped));
                next.push_back(rule.rule(mid, iv.b, iv.mapped));
                split = true;
            } else {
                next.push_back(std::move(iv));
            }
        }
        live.swap(next);
        if (!split) break;
    }
    res.evaluations = rule.evaluations();
    return res;
}

}  // namespace heatnet
