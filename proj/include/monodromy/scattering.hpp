#pragma once

// Total transfer operator of a stack and the amplitude / phase extraction
// at a single wavenumber.
//
// Conventions (exponential basis, incident wave of unit amplitude from the
// left):
//     T = e^{-ikd} / m22
//     R = i (m21 / m22) e^{2ik x0}        x0 = left edge of the stack
//     phi1 = arcsin|T|  in [0, pi/2]
//     phibar2 = principal arg T
//     delta_phi = atan(W/V) folded to (-pi/2, pi/2], 0 at V = W = 0
// The R sign factor is fixed by matching the piecewise wave solution; it
// reproduces the Fresnel slab and textbook delta/barrier reflections.

#include <complex>

#include "monodromy/layer.hpp"
#include "monodromy/transfer_matrix.hpp"

namespace monodromy {

struct ScatteringResult {
    double k = 0.0;
    cplx T{1.0, 0.0};
    cplx R{0.0, 0.0};
    double phi1 = 0.0;      // arcsin|T|
    double phibar2 = 0.0;   // principal arg T
    double delta_phi = 0.0; // R-T phase offset, (-pi/2, pi/2]
    MonodromyComponents comps;
    double d = 0.0; // stack width
};

struct Amplitudes {
    cplx T;
    cplx R;
};

struct PhaseDecomposition {
    double phi1;
    double phibar2;
    double delta_phi;
};

struct BlackBoxPhases {
    double phi1_eff; // arcsin(1/|m22|)
    double phi2_eff; // -arg(m22) - phi1_eff
};

// Ordered product of the element matrices, rightmost factor = leftmost layer.
TransferMatrix assemble(const LayerStack& stack, double k);

Amplitudes amplitudes(const TransferMatrix& m, const LayerStack& stack, double k);

PhaseDecomposition phase_decomposition(const TransferMatrix& m, cplx T, cplx R);

BlackBoxPhases black_box_phases(const TransferMatrix& m);

// M^N via the Chebyshev (trace) recurrence: M^N = M sin(N phi)/sin(phi)
// - I sin((N-1) phi)/sin(phi), cos(phi) = Tr M / 2.  phi is continued into
// the complex plane with Im(phi) >= 0 when |Tr/2| > 1 (forbidden band).
TransferMatrix cayley_hamilton_power(const TransferMatrix& cell, int n);

// Convenience: assemble + amplitudes + phases in one call.
ScatteringResult scatter(const LayerStack& stack, double k);

// Principal wrap of an angle to (-pi, pi] (period configurable).
double wrap_angle(double x, double period = 6.283185307179586476925286766559);

} // namespace monodromy
