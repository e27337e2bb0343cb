#pragma once

// Independent verification path: instead of multiplying transfer matrices,
// build the piecewise wave solution (two coefficients per region, referenced
// to each region's left edge), impose continuity / delta-jump conditions at
// every interface and solve the dense linear system.  Shares no code with
// the transfer-product route.

#include <complex>

#include "monodromy/layer.hpp"

namespace monodromy {

struct MatchedAmplitudes {
    cplx T;
    cplx R;
};

// Throws IllConditionedError when the system is numerically singular
// (expected only at machine-precision band edges).
MatchedAmplitudes match_interfaces(const LayerStack& stack, double k);

// Closed-form single square barrier quantities, evaluated by the tanh/atan
// chain rather than through matrix entries:
//   abs_T   = sin(phi1),  phi1 = atan(2 sigma / ((1+sigma^2) sinh(2 kappa eps)))
//   phibar2 = -k d + 2 atan(tanh(kappa eps)/sigma) + phi1 - pi/2   (= arg T)
//   eta     = -k d / 2 + atan(tanh(kappa eps)/sigma) - pi/4
// so that phibar2 = 2 eta + phi1 holds identically.  k >= kappa0 is handled
// by the same analytic continuation as kappa().
struct SingleBarrierClosedForm {
    double abs_T;
    double phibar2;
    double eta;
    double phi1;
};

SingleBarrierClosedForm single_barrier_closed_form(double kappa0, double halfwidth, double k);

} // namespace monodromy
