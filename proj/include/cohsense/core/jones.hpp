// SPDX-License-Identifier: Apache-2.0
/*
 * Copyright (C) 2026 cohsense contributors
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace cohsense {

using cplx = std::complex<double>;

/// Complex 2x2 polarization transfer matrix
///   [ h_xx  h_xy ]
///   [ h_yx  h_yy ]
/// acting on column field vectors (E_x, E_y).
struct JonesMatrix2 {
    cplx xx{1.0, 0.0};
    cplx xy{0.0, 0.0};
    cplx yx{0.0, 0.0};
    cplx yy{1.0, 0.0};

    static JonesMatrix2 identity() { return {}; }

    JonesMatrix2 adjoint() const {
        return {std::conj(xx), std::conj(yx), std::conj(xy), std::conj(yy)};
    }
    cplx det() const { return xx * yy - xy * yx; }
    cplx trace() const { return xx + yy; }

    JonesMatrix2 inverse() const {
        const cplx d = det();
        const cplx inv = 1.0 / d;
        return {yy * inv, -xy * inv, -yx * inv, xx * inv};
    }

    double frobenius_norm() const {
        return std::sqrt(std::norm(xx) + std::norm(xy) + std::norm(yx) + std::norm(yy));
    }

    bool is_finite() const {
        auto ok = [](cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); };
        return ok(xx) && ok(xy) && ok(yx) && ok(yy);
    }

    /// ||J^H J - I||_F <= tol
    bool is_unitary(double tol) const {
        const JonesMatrix2 g = adjoint() * (*this);
        const double e = std::sqrt(std::norm(g.xx - 1.0) + std::norm(g.xy) +
                                   std::norm(g.yx) + std::norm(g.yy - 1.0));
        return e <= tol;
    }

    friend JonesMatrix2 operator*(const JonesMatrix2& a, const JonesMatrix2& b) {
        return {a.xx * b.xx + a.xy * b.yx, a.xx * b.xy + a.xy * b.yy,
                a.yx * b.xx + a.yy * b.yx, a.yx * b.xy + a.yy * b.yy};
    }
    friend JonesMatrix2 operator*(const JonesMatrix2& a, cplx s) {
        return {a.xx * s, a.xy * s, a.yx * s, a.yy * s};
    }
    friend JonesMatrix2 operator*(cplx s, const JonesMatrix2& a) { return a * s; }
    friend JonesMatrix2 operator+(const JonesMatrix2& a, const JonesMatrix2& b) {
        return {a.xx + b.xx, a.xy + b.xy, a.yx + b.yx, a.yy + b.yy};
    }
    friend JonesMatrix2 operator-(const JonesMatrix2& a, const JonesMatrix2& b) {
        return {a.xx - b.xx, a.xy - b.xy, a.yx - b.yx, a.yy - b.yy};
    }
};

/// Normalized Stokes vector on the unit Poincare sphere; total power s0 is
/// carried separately.
struct StokesVector {
    double s0{1.0};
    double s1{1.0};
    double s2{0.0};
    double s3{0.0};

    std::array<double, 3> unit3() const { return {s1, s2, s3}; }
};

/// Result of the polar decomposition J = hermitian * unitary.
struct PolarParts {
    JonesMatrix2 hermitian;
    JonesMatrix2 unitary;
};

/// Left polar decomposition: J = P * U with P = (J J^H)^{1/2} Hermitian PSD
/// and U unitary, via the closed-form 2x2 matrix square root.
/// Throws SingularMatrix when sigma_min <= 1e-9 * sigma_max.
PolarParts polar_decompose(const JonesMatrix2& j);

/// Polarization-dependent loss of a Hermitian PSD matrix in dB:
/// 20*log10 of its eigenvalue (amplitude) ratio, equivalently 10*log10 of
/// the power ratio of p^2. Throws SingularMatrix when lambda_min <= 0.
double pdl_db(const JonesMatrix2& p);

/// Stokes vector of one matrix row (a, b):
///   s0 = |a|^2+|b|^2, s1 = (|a|^2-|b|^2)/s0,
///   s2 = 2 Re(a b*)/s0, s3 = -2 Im(a b*)/s0.
/// The s3 sign convention is frozen here; flip s3 when comparing against
/// tools that use the opposite handedness. Throws ZeroPower for s0 below
/// threshold.
StokesVector stokes_from_row(cplx a, cplx b);

/// Correlation of two unitary Jones matrices: C = Tr(u2^H u1) / 2.
/// |C| <= 1, phase sensitive, invariant under common left/right unitary
/// rotations. Throws NotUnitary unless both pass is_unitary(1e-6).
cplx unitary_correlation(const JonesMatrix2& u1, const JonesMatrix2& u2);

/// Unitary Jones operator that rotates the Stokes vector of a matrix ROW
/// (via right multiplication, row -> row * R) by `theta` about the given
/// Stokes-space axis. This is the generator used for channel SoP events.
JonesMatrix2 rotation_about_stokes_axis(double theta, const std::array<double, 3>& axis);

/// Hermitian PSD attenuator with the given PDL (dB) whose eigenstates sit
/// at +/- `axis` on the Poincare sphere; max transmission normalized to 1.
JonesMatrix2 pdl_matrix(double pdl_db_value, const std::array<double, 3>& axis);

/// Haar-ish random U(2) draw (random SU(2) point plus uniform phases).
JonesMatrix2 random_unitary(std::mt19937_64& rng);

}  // namespace cohsense
