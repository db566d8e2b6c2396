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

#include "lsvd/numerics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lsvd/error.hpp"

namespace lsvd {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidModel: return "InvalidModel";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::WrongModel: return "WrongModel";
        case ErrorCode::AllZeroDiagonal: return "AllZeroDiagonal";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::ToleranceUnachievable: return "ToleranceUnachievable";
        case ErrorCode::SigmaOutOfRange: return "SigmaOutOfRange";
        case ErrorCode::BlockIdentityViolation: return "BlockIdentityViolation";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

ErrorCategory category(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ConvergenceFailure:
        case ErrorCode::ToleranceUnachievable:
        case ErrorCode::SigmaOutOfRange:
        case ErrorCode::BlockIdentityViolation:
            return ErrorCategory::Numeric;
        case ErrorCode::Io:
            return ErrorCategory::Io;
        default:
            return ErrorCategory::Config;
    }
}

void require_finite(const ComplexMatrix& a, std::string_view what) {
    if (!a.allFinite()) {
        throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN or Inf entries");
    }
}

void require_square(const ComplexMatrix& a, std::string_view what) {
    if (a.rows() != a.cols()) {
        std::ostringstream msg;
        msg << what << " is " << a.rows() << "x" << a.cols();
        throw Error(ErrorCode::NonSquare, msg.str());
    }
}

double hermiticity_error(const ComplexMatrix& a) {
    return (a - a.adjoint()).norm();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

// Higham (2005) Padé degrees and their 1-norm thresholds for double precision.
constexpr std::array<int, 5> kPadeDegrees{3, 5, 7, 9, 13};
constexpr std::array<double, 5> kPadeTheta{1.495585217958292e-2, 2.539398330063230e-1,
                                           9.504178996162932e-1, 2.097847961257068e0,
                                           5.371920351148152e0};
constexpr int kMaxSquarings = 128;

std::array<double, 14> pade_coefficients(int m) {
    switch (m) {
        case 3: return {120., 60., 12., 1.};
        case 5: return {30240., 15120., 3360., 420., 30., 1.};
        case 7: return {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
        case 9:
            return {17643225600., 8821612800., 2075673600., 302702400., 30270240.,
                    2162160.,     110880.,     3960.,       90.,        1.};
        default:
            return {64764752532480000., 32382376266240000., 7771770303897600.,
                    1187353796428800.,  129060195264000.,   10559470521600.,
                    670442572800.,      33522128640.,       1323241920.,
                    40840800.,          960960.,            16380.,
                    182.,               1.};
    }
}

double one_norm(const ComplexMatrix& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

ComplexMatrix pade_approximant(const ComplexMatrix& a, int m) {
    const auto b = pade_coefficients(m);
    const Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix a2 = a * a;
    ComplexMatrix u;
    ComplexMatrix v;
    if (m == 13) {
        const ComplexMatrix a4 = a2 * a2;
        const ComplexMatrix a6 = a4 * a2;
        ComplexMatrix inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
        u = a * (a6 * inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
        inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
        v = a6 * inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    } else {
        ComplexMatrix power = id;
        ComplexMatrix odd = b[1] * id;
        v = b[0] * id;
        for (int j = 2; j <= m; j += 2) {
            power = power * a2;
            v += b[j] * power;
            odd += b[j + 1] * power;
        }
        u = a * odd;
    }
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& a, double tol) {
    require_square(a, "expm argument");
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "expm tolerance must be positive");
    }
    if (tol < std::numeric_limits<double>::epsilon()) {
        std::ostringstream msg;
        msg << "requested tol " << tol << " is below machine epsilon";
        throw Error(ErrorCode::ToleranceUnachievable, msg.str());
    }
    require_finite(a, "expm argument");
    const Index n = a.rows();
    if (n == 0) return a;

    const double norm = one_norm(a);
    for (std::size_t i = 0; i + 1 < kPadeDegrees.size(); ++i) {
        if (norm <= kPadeTheta[i]) return pade_approximant(a, kPadeDegrees[i]);
    }

    int squarings = 0;
    if (norm > kPadeTheta.back()) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kPadeTheta.back())));
    }
    if (squarings > kMaxSquarings) {
        std::ostringstream msg;
        msg << "1-norm " << norm << " needs " << squarings << " squarings (cap "
            << kMaxSquarings << ")";
        throw Error(ErrorCode::ToleranceUnachievable, msg.str());
    }
    ComplexMatrix result = pade_approximant(a * std::ldexp(1.0, -squarings), 13);
    for (int s = 0; s < squarings; ++s) result = result * result;
    if (!result.allFinite()) {
        throw Error(ErrorCode::ToleranceUnachievable,
                    "matrix exponential overflowed during squaring");
    }
    return result;
}

namespace {

struct SvdResiduals {
    double reconstruction;
    double u_unitarity;
    double v_unitarity;
};

SvdResiduals residuals(const ComplexMatrix& a, const SvdResult& r) {
    const Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    return {(r.u * r.sigma.asDiagonal() * r.vdag - a).norm(),
            (r.u.adjoint() * r.u - id).norm(), (r.vdag * r.vdag.adjoint() - id).norm()};
}

bool within(const SvdResiduals& res, double scale, double tol) {
    return res.reconstruction <= tol * scale && res.u_unitarity <= tol &&
           res.v_unitarity <= tol;
}

template <typename Solver>
SvdResult run_solver(const ComplexMatrix& a) {
    Solver solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // Eigen returns singular values sorted in decreasing order.
    return {solver.matrixU(), solver.singularValues(), solver.matrixV().adjoint()};
}

}  // namespace

SvdResult svd(const ComplexMatrix& a, double tol) {
    require_square(a, "svd argument");
    require_finite(a, "svd argument");
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidParameter, "svd tolerance must be positive");
    }
    const double scale = a.norm();
    const Index n = a.rows();
    if (scale == 0.0) {
        return {ComplexMatrix::Identity(n, n), RealVector::Zero(n),
                ComplexMatrix::Identity(n, n)};
    }

    SvdResult result = run_solver<Eigen::BDCSVD<ComplexMatrix>>(a);
    SvdResiduals res = residuals(a, result);
    if (!within(res, scale, tol)) {
        result = run_solver<Eigen::JacobiSVD<ComplexMatrix>>(a);
        res = residuals(a, result);
    }
    if (!within(res, scale, tol)) {
        std::ostringstream msg;
        msg << "residuals: reconstruction " << res.reconstruction / scale << " (relative), U "
            << res.u_unitarity << ", V " << res.v_unitarity << " exceed tol " << tol;
        throw Error(ErrorCode::ConvergenceFailure, msg.str());
    }
    return result;
}

HermitianEigensystem eig_hermitian(const ComplexMatrix& a) {
    require_square(a, "eig_hermitian argument");
    require_finite(a, "eig_hermitian argument");
    const double err = hermiticity_error(a);
    if (err > 1e-10 * a.norm()) {
        std::ostringstream msg;
        msg << "||a - a^dagger||_F = " << err;
        throw Error(ErrorCode::NotHermitian, msg.str());
    }
    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace lsvd
