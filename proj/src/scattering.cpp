#include "monodromy/scattering.hpp"

#include <cassert>
#include <cmath>

#include "monodromy/errors.hpp"

namespace monodromy {

double wrap_angle(double x, double period) {
    return x - period * std::ceil((x - 0.5 * period) / period);
}

TransferMatrix assemble(const LayerStack& stack, double k) {
    stack.validate();
    if (!(k > 0.0)) throw NumericDomainError("assemble: k must be positive");
    TransferMatrix total = TransferMatrix::identity();
    for (const Layer& layer : stack.layers)
        total = multiply(layer_matrix(layer, k), total);
    return total;
}

Amplitudes amplitudes(const TransferMatrix& m, const LayerStack& stack, double k) {
    // |m22|^2 = 1 + |m21|^2 >= 1 for unimodular canonical matrices
    assert(std::abs(m.m22) > 0.5);
    const double d = stack.width();
    const cplx T = std::polar(1.0, -k * d) / m.m22;
    const cplx R = cplx{0.0, 1.0} * (m.m21 / m.m22) * std::polar(1.0, 2.0 * k * stack.left_edge());
    return Amplitudes{T, R};
}

PhaseDecomposition phase_decomposition(const TransferMatrix& m, cplx T, cplx R) {
    PhaseDecomposition p;
    // arcsin(|T|) evaluated as atan2(|T|, |R|): same value under unitarity,
    // well conditioned near full transmission
    p.phi1 = std::atan2(std::abs(T), std::abs(R));
    p.phibar2 = std::arg(T);
    const MonodromyComponents c = components(m);
    if (c.v == 0.0 && c.w == 0.0) {
        p.delta_phi = 0.0;
    } else {
        // tan(delta_phi) = W/V, folded to the principal (-pi/2, pi/2] branch
        // so that mirror-symmetric stacks (W = 0) report exactly zero.
        double dp = std::atan2(c.w, c.v);
        if (dp > 0.5 * M_PI) dp -= M_PI;
        if (dp <= -0.5 * M_PI) dp += M_PI;
        p.delta_phi = dp;
    }
    return p;
}

BlackBoxPhases black_box_phases(const TransferMatrix& m) {
    // arcsin(1/|m22|) via atan2(1, |m21|), exact for unimodular matrices
    BlackBoxPhases b;
    b.phi1_eff = std::atan2(1.0, std::abs(m.m21));
    b.phi2_eff = -std::arg(m.m22) - b.phi1_eff;
    return b;
}

TransferMatrix cayley_hamilton_power(const TransferMatrix& cell, int n) {
    if (n < 1) throw NumericDomainError("cayley_hamilton_power: N must be >= 1");
    if (n == 1) return cell;

    const cplx half_trace = trace_half(cell);
    cplx ratio_n, ratio_nm1; // sin(N phi)/sin(phi), sin((N-1) phi)/sin(phi)

    cplx phi = std::acos(half_trace);
    if (phi.imag() < 0.0) phi = -phi; // continuation branch Im(phi) >= 0
    const cplx sin_phi = std::sin(phi);
    if (std::abs(sin_phi) > 1e-6) {
        ratio_n = std::sin(double(n) * phi) / sin_phi;
        ratio_nm1 = std::sin(double(n - 1) * phi) / sin_phi;
    } else {
        // band edge, cos(phi) ~ +-1: Chebyshev recurrence
        // U_{m+1}(x) = 2x U_m(x) - U_{m-1}(x)
        cplx um1{0.0, 0.0}, u{1.0, 0.0};
        for (int m = 1; m < n; ++m) {
            const cplx next = 2.0 * half_trace * u - um1;
            um1 = u;
            u = next;
        }
        ratio_n = u;
        ratio_nm1 = um1;
    }

    return TransferMatrix{cell.m11 * ratio_n - ratio_nm1, cell.m12 * ratio_n,
                          cell.m21 * ratio_n, cell.m22 * ratio_n - ratio_nm1};
}

ScatteringResult scatter(const LayerStack& stack, double k) {
    ScatteringResult r;
    r.k = k;
    r.d = stack.width();
    const TransferMatrix m = assemble(stack, k);
    const Amplitudes a = amplitudes(m, stack, k);
    r.T = a.T;
    r.R = a.R;
    const PhaseDecomposition p = phase_decomposition(m, a.T, a.R);
    r.phi1 = p.phi1;
    r.phibar2 = p.phibar2;
    r.delta_phi = p.delta_phi;
    r.comps = components(m);
    return r;
}

} // namespace monodromy
