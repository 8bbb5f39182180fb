// SPDX-License-Identifier: Apache-2.0
/*
 * Copyright (C) 2026 cohsense contributors
 */
#include "cohsense/core/jones.hpp"

#include <algorithm>

#include "cohsense/core/errors.hpp"

namespace cohsense {

namespace {
constexpr double kZeroPowerEps = 1e-30;
}

PolarParts polar_decompose(const JonesMatrix2& j) {
    // A = J J^H is Hermitian PSD; its eigenvalues are the squared singular
    // values of J.
    const JonesMatrix2 a = j * j.adjoint();
    const double tr = a.xx.real() + a.yy.real();
    const double dt = std::max(0.0, std::real(a.det()));
    const double mean = 0.5 * tr;
    const double rad = std::sqrt(std::max(0.0, mean * mean - dt));
    const double lmax = mean + rad;
    const double lmin = mean - rad;
    if (!(lmin > 1e-18 * lmax) || !std::isfinite(lmax))
        throw SingularMatrix("polar_decompose: singular or non-finite input");

    // sqrt of a 2x2 PSD matrix: (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A))
    const double s = std::sqrt(dt);
    const double t = std::sqrt(tr + 2.0 * s);
    JonesMatrix2 p = a;
    p.xx += s;
    p.yy += s;
    p = p * (1.0 / t);

    const JonesMatrix2 u = p.inverse() * j;
    return {p, u};
}

double pdl_db(const JonesMatrix2& p) {
    // Eigenvalues of a Hermitian 2x2 from trace and determinant.
    const double tr = p.xx.real() + p.yy.real();
    const double dt = std::real(p.det());
    const double mean = 0.5 * tr;
    const double rad = std::sqrt(std::max(0.0, mean * mean - dt));
    const double lmax = mean + rad;
    const double lmin = mean - rad;
    if (!(lmin > 0.0))
        throw SingularMatrix("pdl_db: non-positive eigenvalue");
    return 20.0 * std::log10(lmax / lmin);
}

StokesVector stokes_from_row(cplx a, cplx b) {
    const double pa = std::norm(a);
    const double pb = std::norm(b);
    const double s0 = pa + pb;
    if (!(s0 > kZeroPowerEps))
        throw ZeroPower("stokes_from_row: row power below threshold");
    const cplx ab = a * std::conj(b);
    double s1 = (pa - pb) / s0;
    double s2 = 2.0 * ab.real() / s0;
    double s3 = -2.0 * ab.imag() / s0;
    // (|a|^2-|b|^2)^2 + 4|a b*|^2 == s0^2 holds exactly, so this only mops
    // up rounding residue.
    const double n = std::sqrt(s1 * s1 + s2 * s2 + s3 * s3);
    s1 /= n;
    s2 /= n;
    s3 /= n;
    return {s0, s1, s2, s3};
}

cplx unitary_correlation(const JonesMatrix2& u1, const JonesMatrix2& u2) {
    if (!u1.is_unitary(1e-6) || !u2.is_unitary(1e-6))
        throw NotUnitary("unitary_correlation: input fails is_unitary(1e-6)");
    return 0.5 * (u2.adjoint() * u1).trace();
}

JonesMatrix2 rotation_about_stokes_axis(double theta, const std::array<double, 3>& axis) {
    // Stokes components of a row map onto the Pauli basis as
    // (s1,s2,s3) <-> (sigma3, sigma1, -sigma2) under right multiplication,
    // so the generator for Stokes axis (a1,a2,a3) is
    // m = a2*sigma1 - a3*sigma2 + a1*sigma3.
    const double m1 = axis[1];
    const double m2 = -axis[2];
    const double m3 = axis[0];
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return {cplx(c, -s * m3), cplx(-s * m2, -s * m1),
            cplx(s * m2, -s * m1), cplx(c, s * m3)};
}

JonesMatrix2 pdl_matrix(double pdl_db_value, const std::array<double, 3>& axis) {
    // Same Pauli mapping as rotation_about_stokes_axis, so a rotation about
    // `axis` commutes with the attenuator it parameterizes.
    const double m1 = axis[1];
    const double m2 = -axis[2];
    const double m3 = axis[0];
    const double g = pdl_db_value * std::log(10.0) / 20.0;
    const double ch = std::cosh(0.5 * g);
    const double sh = std::sinh(0.5 * g);
    // exp(g/2 * m.sigma), eigenvalues e^{+-g/2}; scale so lambda_max = 1.
    JonesMatrix2 p{cplx(ch + sh * m3, 0.0), cplx(sh * m1, -sh * m2),
                   cplx(sh * m1, sh * m2), cplx(ch - sh * m3, 0.0)};
    return p * std::exp(-0.5 * g);
}

JonesMatrix2 random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cplx u1(gauss(rng), gauss(rng));
    cplx u2(gauss(rng), gauss(rng));
    const double n = std::sqrt(std::norm(u1) + std::norm(u2));
    u1 /= n;
    u2 /= n;
    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    const cplx ph = std::polar(1.0, uni(rng));
    const cplx gl = std::polar(1.0, uni(rng));
    JonesMatrix2 u{u1, -ph * std::conj(u2), u2, ph * std::conj(u1)};
    return u * gl;
}

}  // namespace cohsense
