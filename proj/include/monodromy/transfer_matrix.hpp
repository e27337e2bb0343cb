#pragma once

// Complex 2x2 transfer (monodromy) matrices in the exponential wave basis.
//
// The matrices handled here are unimodular (det = 1) but not unitary.  In
// canonical form they look like
//
//     [ X + iY   -V - iW ]
//     [ -V + iW   X - iY ]      X^2 + Y^2 - V^2 - W^2 = 1,
//
// i.e. m22 = conj(m11) and m21 = conj(m12).  V and W measure the imbalance
// between the two counter-propagating waves; W = 0 for mirror-symmetric
// structures.

#include <cmath>
#include <complex>

#include "monodromy/errors.hpp"

namespace monodromy {

using cplx = std::complex<double>;

struct TransferMatrix {
    cplx m11{1.0, 0.0};
    cplx m12{0.0, 0.0};
    cplx m21{0.0, 0.0};
    cplx m22{1.0, 0.0};

    static TransferMatrix identity() { return TransferMatrix{}; }

    bool finite() const {
        auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
        return ok(m11) && ok(m12) && ok(m21) && ok(m22);
    }
};

// Real canonical components (X, Y, V, W) of a monodromy-form matrix.
struct MonodromyComponents {
    double x = 1.0;
    double y = 0.0;
    double v = 0.0;
    double w = 0.0;

    // X^2 + Y^2 - V^2 - W^2 - 1, zero for unimodular canonical matrices.
    double unimodularity_residual() const { return x * x + y * y - v * v - w * w - 1.0; }

    TransferMatrix to_matrix() const {
        return TransferMatrix{cplx{x, y}, cplx{-v, -w}, cplx{-v, w}, cplx{x, -y}};
    }
};

inline TransferMatrix multiply(const TransferMatrix& a, const TransferMatrix& b) {
    if (!a.finite() || !b.finite())
        throw NumericDomainError("transfer-matrix multiply: non-finite entries");
    return TransferMatrix{a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

inline cplx determinant(const TransferMatrix& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

inline cplx trace_half(const TransferMatrix& m) { return 0.5 * (m.m11 + m.m22); }

// Inverse of a unimodular matrix (adjugate).
inline TransferMatrix unimodular_inverse(const TransferMatrix& m) {
    return TransferMatrix{m.m22, -m.m12, -m.m21, m.m11};
}

// Max deviation from the canonical structure m22 = conj(m11), m21 = conj(m12).
inline double canonical_residual(const TransferMatrix& m) {
    return std::max(std::abs(m.m22 - std::conj(m.m11)), std::abs(m.m21 - std::conj(m.m12)));
}

inline bool is_canonical(const TransferMatrix& m, double tol = 1e-10) {
    return canonical_residual(m) <= tol;
}

// Extract (X, Y, V, W).  Throws FormViolationError when the matrix is not
// canonical within `tol`; the exception carries the residual.
inline MonodromyComponents components(const TransferMatrix& m, double tol = 1e-7) {
    const double res = canonical_residual(m);
    if (!(res <= tol))
        throw FormViolationError("matrix is not in canonical monodromy form", res);
    return MonodromyComponents{m.m11.real(), m.m11.imag(), -m.m12.real(), -m.m12.imag()};
}

} // namespace monodromy
