#pragma once

// Batched stack-product kernels for k-grid sweeps.
//
// A LayerStack is compiled once into a flat op list; a kernel then evaluates
// the total transfer matrix for a whole array of wavenumbers.  The scalar
// kernel is the reference; the AVX2 (x86) and NEON (aarch64) variants
// vectorize the 2x2 complex product chain across wavenumbers while calling
// the same scalar element construction per lane, so all variants produce
// bit-identical results.  The active variant is selected at runtime from CPU
// capabilities and can be pinned via the MONODROMY_KERNEL environment
// variable ("scalar", "avx2", "neon") or KernelChoice.

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/layer.hpp"

namespace monodromy {

struct StackProgram {
    std::vector<Layer> ops; // left to right
};

StackProgram compile_program(const LayerStack& stack);

// SoA view of n total matrices: re/im of the four entries.
struct MatrixBatchView {
    double* m11r;
    double* m11i;
    double* m12r;
    double* m12i;
    double* m21r;
    double* m21i;
    double* m22r;
    double* m22i;

    MatrixBatchView offset(std::size_t i) const {
        return MatrixBatchView{m11r + i, m11i + i, m12r + i, m12i + i,
                               m21r + i, m21i + i, m22r + i, m22i + i};
    }
};

// Owning SoA storage.
struct MatrixBatch {
    std::vector<double> m11r, m11i, m12r, m12i, m21r, m21i, m22r, m22i;

    explicit MatrixBatch(std::size_t n = 0) { resize(n); }
    void resize(std::size_t n);
    std::size_t size() const { return m11r.size(); }
    MatrixBatchView view();
    TransferMatrix matrix(std::size_t i) const;
};

using KernelFn = void (*)(const StackProgram&, const double* k, std::size_t n,
                          const MatrixBatchView& out);

void scalar_kernel(const StackProgram&, const double* k, std::size_t n,
                   const MatrixBatchView& out);
#if defined(__x86_64__) || defined(_M_X64)
void avx2_kernel(const StackProgram&, const double* k, std::size_t n,
                 const MatrixBatchView& out);
bool avx2_supported();
#endif
#if defined(__aarch64__)
void neon_kernel(const StackProgram&, const double* k, std::size_t n,
                 const MatrixBatchView& out);
#endif

enum class KernelChoice { Auto, Scalar, Avx2, Neon };

// Resolve a kernel.  "Auto" honours MONODROMY_KERNEL, then CPU capabilities.
// Requesting an unavailable variant throws ConfigError.
KernelFn select_kernel(KernelChoice choice = KernelChoice::Auto);
const char* kernel_name(KernelFn fn);
KernelChoice kernel_choice_from_name(const std::string& name);

} // namespace monodromy
