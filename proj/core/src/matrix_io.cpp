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

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "heatnet/error.hpp"
#include "heatnet/network.hpp"
#include "heatnet/output.hpp"

namespace heatnet {

Eigen::MatrixXd parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    long long k = 0;
    if (!(in >> k) || k <= 0) fail(ErrorCode::IoError, "matrix text must start with a positive size");
    Eigen::MatrixXd m(k, k);
    for (long long i = 0; i < k; ++i) {
        for (long long j = 0; j < k; ++j) {
            if (!(in >> m(i, j)))
                fail(ErrorCode::IoError, "matrix text has fewer than K*K entries");
        }
    }
    std::string extra;
    if (in >> extra) fail(ErrorCode::IoError, "matrix text has trailing data: " + extra);
    return m;
}

std::string format_matrix_text(const Eigen::MatrixXd& m) {
    std::string out = std::to_string(m.rows()) + "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_double(m(i, j));
        }
        out += '\n';
    }
    return out;
}

Eigen::MatrixXd read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorCode::IoError, "cannot open matrix file " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_matrix_text(buf.str());
}

void write_matrix_file(const std::string& path, const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "matrix must be square");
    std::ofstream f(path);
    if (!f) fail(ErrorCode::IoError, "cannot write matrix file " + path);
    f << format_matrix_text(m);
}

}  // namespace heatnet
