#pragma once

// Internal helpers shared by the kernel variants.  The accumulation step
// A <- E * A is written with a fixed operation order (mul, mul, sub / mul,
// mul, add, then the pairwise sum); the SIMD variants mirror this order
// exactly, and all kernel translation units are built with fp-contract off,
// so every variant returns bit-identical totals.

#include "monodromy/kernels.hpp"

namespace monodromy::detail {

struct Acc {
    double m11r, m11i, m12r, m12i, m21r, m21i, m22r, m22i;

    static Acc identity() { return Acc{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0}; }
};

// A <- E * A with E the canonical element [(x,y), (-v,0); (-v,0), (x,-y)].
inline void accumulate(double ex, double ey, double ev, Acc& a) {
    const double e11r = ex, e11i = ey;
    const double e12r = -ev, e12i = 0.0;
    const double e21r = -ev, e21i = 0.0;
    const double e22r = ex, e22i = -ey;

    const double n11r = (e11r * a.m11r - e11i * a.m11i) + (e12r * a.m21r - e12i * a.m21i);
    const double n11i = (e11r * a.m11i + e11i * a.m11r) + (e12r * a.m21i + e12i * a.m21r);
    const double n12r = (e11r * a.m12r - e11i * a.m12i) + (e12r * a.m22r - e12i * a.m22i);
    const double n12i = (e11r * a.m12i + e11i * a.m12r) + (e12r * a.m22i + e12i * a.m22r);
    const double n21r = (e21r * a.m11r - e21i * a.m11i) + (e22r * a.m21r - e22i * a.m21i);
    const double n21i = (e21r * a.m11i + e21i * a.m11r) + (e22r * a.m21i + e22i * a.m21r);
    const double n22r = (e21r * a.m12r - e21i * a.m12i) + (e22r * a.m22r - e22i * a.m22i);
    const double n22i = (e21r * a.m12i + e21i * a.m12r) + (e22r * a.m22i + e22i * a.m22r);

    a = Acc{n11r, n11i, n12r, n12i, n21r, n21i, n22r, n22i};
}

inline void store(const Acc& a, const MatrixBatchView& out, std::size_t i) {
    out.m11r[i] = a.m11r;
    out.m11i[i] = a.m11i;
    out.m12r[i] = a.m12r;
    out.m12i[i] = a.m12i;
    out.m21r[i] = a.m21r;
    out.m21i[i] = a.m21i;
    out.m22r[i] = a.m22r;
    out.m22i[i] = a.m22i;
}

} // namespace monodromy::detail
