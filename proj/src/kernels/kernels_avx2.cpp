// AVX2 variant: four wavenumbers per pass.  Element construction stays
// scalar per lane (same element_xyv as the reference kernel); the 2x2
// complex product chain is vectorized with mul/add/sub only (no FMA), in
// the exact operation order of detail::accumulate.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernel_common.hpp"

namespace monodromy {

bool avx2_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

struct AccV {
    __m256d m11r, m11i, m12r, m12i, m21r, m21i, m22r, m22i;
};

inline AccV identity_v() {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    return AccV{one, zero, zero, zero, zero, zero, one, zero};
}

// re(p*q) = pr*qr - pi*qi ; im(p*q) = pr*qi + pi*qr
inline __m256d cmul_re(__m256d pr, __m256d pi, __m256d qr, __m256d qi) {
    return _mm256_sub_pd(_mm256_mul_pd(pr, qr), _mm256_mul_pd(pi, qi));
}
inline __m256d cmul_im(__m256d pr, __m256d pi, __m256d qr, __m256d qi) {
    return _mm256_add_pd(_mm256_mul_pd(pr, qr), _mm256_mul_pd(pi, qi));
}

inline void accumulate_v(__m256d ex, __m256d ey, __m256d ev, AccV& a) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d e11r = ex, e11i = ey;
    const __m256d e12r = _mm256_sub_pd(zero, ev), e12i = zero;
    const __m256d e21r = e12r, e21i = zero;
    const __m256d e22r = ex, e22i = _mm256_sub_pd(zero, ey);

    const __m256d n11r = _mm256_add_pd(cmul_re(e11r, e11i, a.m11r, a.m11i),
                                       cmul_re(e12r, e12i, a.m21r, a.m21i));
    const __m256d n11i = _mm256_add_pd(cmul_im(e11r, e11i, a.m11i, a.m11r),
                                       cmul_im(e12r, e12i, a.m21i, a.m21r));
    const __m256d n12r = _mm256_add_pd(cmul_re(e11r, e11i, a.m12r, a.m12i),
                                       cmul_re(e12r, e12i, a.m22r, a.m22i));
    const __m256d n12i = _mm256_add_pd(cmul_im(e11r, e11i, a.m12i, a.m12r),
                                       cmul_im(e12r, e12i, a.m22i, a.m22r));
    const __m256d n21r = _mm256_add_pd(cmul_re(e21r, e21i, a.m11r, a.m11i),
                                       cmul_re(e22r, e22i, a.m21r, a.m21i));
    const __m256d n21i = _mm256_add_pd(cmul_im(e21r, e21i, a.m11i, a.m11r),
                                       cmul_im(e22r, e22i, a.m21i, a.m21r));
    const __m256d n22r = _mm256_add_pd(cmul_re(e21r, e21i, a.m12r, a.m12i),
                                       cmul_re(e22r, e22i, a.m22r, a.m22i));
    const __m256d n22i = _mm256_add_pd(cmul_im(e21r, e21i, a.m12i, a.m12r),
                                       cmul_im(e22r, e22i, a.m22i, a.m22r));

    a = AccV{n11r, n11i, n12r, n12i, n21r, n21i, n22r, n22i};
}

} // namespace

void avx2_kernel(const StackProgram& program, const double* k, std::size_t n,
                 const MatrixBatchView& out) {
    const std::size_t quads = n / 4 * 4;
    for (std::size_t i = 0; i < quads; i += 4) {
        AccV acc = identity_v();
        alignas(32) double ex[4], ey[4], ev[4];
        for (const Layer& op : program.ops) {
            for (int lane = 0; lane < 4; ++lane) {
                const ElementXYV e = element_xyv(op, k[i + lane]);
                ex[lane] = e.x;
                ey[lane] = e.y;
                ev[lane] = e.v;
            }
            accumulate_v(_mm256_load_pd(ex), _mm256_load_pd(ey), _mm256_load_pd(ev), acc);
        }
        _mm256_storeu_pd(out.m11r + i, acc.m11r);
        _mm256_storeu_pd(out.m11i + i, acc.m11i);
        _mm256_storeu_pd(out.m12r + i, acc.m12r);
        _mm256_storeu_pd(out.m12i + i, acc.m12i);
        _mm256_storeu_pd(out.m21r + i, acc.m21r);
        _mm256_storeu_pd(out.m21i + i, acc.m21i);
        _mm256_storeu_pd(out.m22r + i, acc.m22r);
        _mm256_storeu_pd(out.m22i + i, acc.m22i);
    }
    if (quads < n) scalar_kernel(program, k + quads, n - quads, out.offset(quads));
}

} // namespace monodromy

#endif // x86_64
