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

#pragma once

#include "lsvd/numerics.hpp"

namespace lsvd {

/// Smallest power of two >= n (n >= 1).
Index next_power_of_two(Index n);

/// m (+) I: m in the top-left block, identity on the complement, padded to the
/// next power of two. Padded basis states are invariant and decoupled.
ComplexMatrix pad_to_power_of_two(const ComplexMatrix& m);

/// SVD of a padded propagator with singular values rescaled into [0, 1]:
/// padded = u * diag(sigma * scale) * vdag.
struct SvdFactors {
    ComplexMatrix u;
    RealVector sigma;  // descending, in [0, 1]
    ComplexMatrix vdag;
    double scale = 1.0;  // max(1, largest raw singular value)

    Index n() const noexcept { return sigma.size(); }
    ComplexMatrix scaled_matrix() const;  // u * diag(sigma) * vdag
};

SvdFactors decompose(const ComplexMatrix& padded, double tol = kDefaultTol);

/// Diagonal unitary diag(Sigma_+, Sigma_-) with Sigma_pm = sigma +- i sqrt(1 - sigma^2).
struct DilatedUnitary {
    ComplexVector plus;
    ComplexVector minus;

    /// The 2n diagonal entries, Sigma_+ block first.
    ComplexVector diagonal() const;
    ComplexMatrix matrix() const;
};

/// Throws SigmaOutOfRange if any sigma lies outside [0, 1] by more than 1e-12;
/// values inside that slack are clamped.
DilatedUnitary dilate(const SvdFactors& factors);

}  // namespace lsvd
