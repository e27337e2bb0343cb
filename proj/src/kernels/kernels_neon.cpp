// NEON variant (aarch64): two wavenumbers per pass, mirroring the scalar
// accumulation order with vmulq/vaddq/vsubq only.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernel_common.hpp"

namespace monodromy {

namespace {

struct AccV {
    float64x2_t m11r, m11i, m12r, m12i, m21r, m21i, m22r, m22i;
};

inline AccV identity_v() {
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t zero = vdupq_n_f64(0.0);
    return AccV{one, zero, zero, zero, zero, zero, one, zero};
}

inline float64x2_t cmul_re(float64x2_t pr, float64x2_t pi, float64x2_t qr, float64x2_t qi) {
    return vsubq_f64(vmulq_f64(pr, qr), vmulq_f64(pi, qi));
}
inline float64x2_t cmul_im(float64x2_t pr, float64x2_t pi, float64x2_t qr, float64x2_t qi) {
    return vaddq_f64(vmulq_f64(pr, qr), vmulq_f64(pi, qi));
}

inline void accumulate_v(float64x2_t ex, float64x2_t ey, float64x2_t ev, AccV& a) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    const float64x2_t e11r = ex, e11i = ey;
    const float64x2_t e12r = vsubq_f64(zero, ev), e12i = zero;
    const float64x2_t e21r = e12r, e21i = zero;
    const float64x2_t e22r = ex, e22i = vsubq_f64(zero, ey);

    const float64x2_t n11r = vaddq_f64(cmul_re(e11r, e11i, a.m11r, a.m11i),
                                       cmul_re(e12r, e12i, a.m21r, a.m21i));
    const float64x2_t n11i = vaddq_f64(cmul_im(e11r, e11i, a.m11i, a.m11r),
                                       cmul_im(e12r, e12i, a.m21i, a.m21r));
    const float64x2_t n12r = vaddq_f64(cmul_re(e11r, e11i, a.m12r, a.m12i),
                                       cmul_re(e12r, e12i, a.m22r, a.m22i));
    const float64x2_t n12i = vaddq_f64(cmul_im(e11r, e11i, a.m12i, a.m12r),
                                       cmul_im(e12r, e12i, a.m22i, a.m22r));
    const float64x2_t n21r = vaddq_f64(cmul_re(e21r, e21i, a.m11r, a.m11i),
                                       cmul_re(e22r, e22i, a.m21r, a.m21i));
    const float64x2_t n21i = vaddq_f64(cmul_im(e21r, e21i, a.m11i, a.m11r),
                                       cmul_im(e22r, e22i, a.m21i, a.m21r));
    const float64x2_t n22r = vaddq_f64(cmul_re(e21r, e21i, a.m12r, a.m12i),
                                       cmul_re(e22r, e22i, a.m22r, a.m22i));
    const float64x2_t n22i = vaddq_f64(cmul_im(e21r, e21i, a.m12i, a.m12r),
                                       cmul_im(e22r, e22i, a.m22i, a.m22r));

    a = AccV{n11r, n11i, n12r, n12i, n21r, n21i, n22r, n22i};
}

} // namespace

void neon_kernel(const StackProgram& program, const double* k, std::size_t n,
                 const MatrixBatchView& out) {
    const std::size_t pairs = n / 2 * 2;
    for (std::size_t i = 0; i < pairs; i += 2) {
        AccV acc = identity_v();
        double ex[2], ey[2], ev[2];
        for (const Layer& op : program.ops) {
            for (int lane = 0; lane < 2; ++lane) {
                const ElementXYV e = element_xyv(op, k[i + lane]);
                ex[lane] = e.x;
                ey[lane] = e.y;
                ev[lane] = e.v;
            }
            accumulate_v(vld1q_f64(ex), vld1q_f64(ey), vld1q_f64(ev), acc);
        }
        vst1q_f64(out.m11r + i, acc.m11r);
        vst1q_f64(out.m11i + i, acc.m11i);
        vst1q_f64(out.m12r + i, acc.m12r);
        vst1q_f64(out.m12i + i, acc.m12i);
        vst1q_f64(out.m21r + i, acc.m21r);
        vst1q_f64(out.m21i + i, acc.m21i);
        vst1q_f64(out.m22r + i, acc.m22r);
        vst1q_f64(out.m22i + i, acc.m22i);
    }
    if (pairs < n) scalar_kernel(program, k + pairs, n - pairs, out.offset(pairs));
}

} // namespace monodromy

#endif // aarch64
