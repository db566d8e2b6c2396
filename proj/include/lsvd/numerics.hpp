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

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace lsvd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Default relative tolerance for expm and svd. Everything downstream is
/// derived from this value.
inline constexpr double kDefaultTol = 1e-12;

/// Throws ErrorCode::NonFinite if any entry is NaN or Inf.
void require_finite(const ComplexMatrix& a, std::string_view what);

/// Throws ErrorCode::NonSquare unless `a` is square.
void require_square(const ComplexMatrix& a, std::string_view what);

/// Frobenius norm of a - a^dagger.
double hermiticity_error(const ComplexMatrix& a);

/// Kronecker product. Entry (i*b.rows()+k, j*b.cols()+l) is a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix exponential by scaling and squaring with a diagonal Padé core
/// (degree 3..13, picked from the 1-norm). The Padé degree targets unit
/// roundoff, so `tol` below machine epsilon is rejected as unachievable.
ComplexMatrix expm(const ComplexMatrix& a, double tol = kDefaultTol);

struct SvdResult {
    ComplexMatrix u;
    RealVector sigma;  // non-negative, descending
    ComplexMatrix vdag;
};

/// Full SVD of a square matrix, a = u * diag(sigma) * vdag.
///
/// The reconstruction residual and both unitarity residuals are checked
/// against `tol` before returning; failure raises ConvergenceFailure with
/// the achieved residual in the message.
SvdResult svd(const ComplexMatrix& a, double tol = kDefaultTol);

struct HermitianEigensystem {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // column j pairs with values(j)
};

HermitianEigensystem eig_hermitian(const ComplexMatrix& a);

}  // namespace lsvd
