#include "kernel_common.hpp"

#include "monodromy/kernels.hpp"

namespace monodromy {

StackProgram compile_program(const LayerStack& stack) {
    stack.validate();
    return StackProgram{stack.layers};
}

void MatrixBatch::resize(std::size_t n) {
    m11r.assign(n, 0.0);
    m11i.assign(n, 0.0);
    m12r.assign(n, 0.0);
    m12i.assign(n, 0.0);
    m21r.assign(n, 0.0);
    m21i.assign(n, 0.0);
    m22r.assign(n, 0.0);
    m22i.assign(n, 0.0);
}

MatrixBatchView MatrixBatch::view() {
    return MatrixBatchView{m11r.data(), m11i.data(), m12r.data(), m12i.data(),
                           m21r.data(), m21i.data(), m22r.data(), m22i.data()};
}

TransferMatrix MatrixBatch::matrix(std::size_t i) const {
    return TransferMatrix{cplx{m11r[i], m11i[i]}, cplx{m12r[i], m12i[i]},
                          cplx{m21r[i], m21i[i]}, cplx{m22r[i], m22i[i]}};
}

void scalar_kernel(const StackProgram& program, const double* k, std::size_t n,
                   const MatrixBatchView& out) {
    for (std::size_t i = 0; i < n; ++i) {
        detail::Acc acc = detail::Acc::identity();
        for (const Layer& op : program.ops) {
            const ElementXYV e = element_xyv(op, k[i]);
            detail::accumulate(e.x, e.y, e.v, acc);
        }
        detail::store(acc, out, i);
    }
}

} // namespace monodromy
