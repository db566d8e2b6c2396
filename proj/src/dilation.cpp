// Copyright 2026 The lsvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsvd/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lsvd/error.hpp"

namespace lsvd {

namespace {
constexpr double kSigmaSlack = 1e-12;
}

Index next_power_of_two(Index n) {
    if (n < 1) throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
    Index p = 1;
    while (p < n) p <<= 1;
    return p;
}

ComplexMatrix pad_to_power_of_two(const ComplexMatrix& m) {
    require_square(m, "padding input");
    const Index r = m.rows();
    const Index n = next_power_of_two(r);
    ComplexMatrix out = ComplexMatrix::Identity(n, n);
    out.topLeftCorner(r, r) = m;
    return out;
}

ComplexMatrix SvdFactors::scaled_matrix() const {
    return u * sigma.asDiagonal() * vdag;
}

SvdFactors decompose(const ComplexMatrix& padded, double tol) {
    require_square(padded, "decompose input");
    const Index n = padded.rows();
    if (n != next_power_of_two(n)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "decompose expects a power-of-two dimension, got " + std::to_string(n));
    }
    SvdResult raw = svd(padded, tol);
    SvdFactors out;
    out.scale = std::max(1.0, raw.sigma.size() > 0 ? raw.sigma(0) : 0.0);
    out.sigma = (raw.sigma / out.scale).cwiseMin(1.0);
    out.u = std::move(raw.u);
    out.vdag = std::move(raw.vdag);
    return out;
}

ComplexVector DilatedUnitary::diagonal() const {
    ComplexVector d(plus.size() + minus.size());
    d << plus, minus;
    return d;
}

ComplexMatrix DilatedUnitary::matrix() const {
    return diagonal().asDiagonal();
}

DilatedUnitary dilate(const SvdFactors& factors) {
    const Index n = factors.sigma.size();
    DilatedUnitary out{ComplexVector(n), ComplexVector(n)};
    for (Index j = 0; j < n; ++j) {
        double s = factors.sigma(j);
        if (!(s >= -kSigmaSlack && s <= 1.0 + kSigmaSlack)) {
            std::ostringstream msg;
            msg << "sigma[" << j << "] = " << s << " is outside [0, 1]";
            throw Error(ErrorCode::SigmaOutOfRange, msg.str());
        }
        s = std::clamp(s, 0.0, 1.0);
        // sigma * sqrt((1 - sigma^2) / sigma^2) simplifies to sqrt(1 - sigma^2),
        // which stays defined at sigma = 0.
        const double c = std::sqrt(std::max(0.0, 1.0 - s * s));
        out.plus(j) = Complex(s, c);
        out.minus(j) = Complex(s, -c);
    }
    return out;
}

}  // namespace lsvd
