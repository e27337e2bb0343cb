#include <doctest.h>

#include <cstring>
#include <random>

#include "monodromy/kernels.hpp"
#include "monodromy/scattering.hpp"
#include "monodromy/spectrum.hpp"
#include "test_util.hpp"

using namespace monodromy;

namespace {

std::vector<double> random_grid(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.05, 3.0);
    std::vector<double> g(n);
    for (double& k : g) k = u(rng);
    std::sort(g.begin(), g.end());
    return g;
}

} // namespace

TEST_CASE("scalar kernel agrees with the per-k transfer product") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        const LayerStack stack = testutil::random_stack(rng, 8);
        const StackProgram program = compile_program(stack);
        const auto grid = random_grid(rng, 33);
        MatrixBatch batch(grid.size());
        scalar_kernel(program, grid.data(), grid.size(), batch.view());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const TransferMatrix ref = assemble(stack, grid[i]);
            const double scale = std::max(1.0, std::abs(ref.m22));
            CHECK(testutil::entry_distance(batch.matrix(i), ref) / scale < 1e-13);
        }
    }
}

TEST_CASE("kernel results are invariant under batch splitting") {
    std::mt19937_64 rng(97);
    const LayerStack stack = testutil::random_stack(rng, 6);
    const StackProgram program = compile_program(stack);
    const auto grid = random_grid(rng, 41); // odd size: exercises the tail
    const KernelFn kernel = select_kernel();

    MatrixBatch whole(grid.size()), split(grid.size());
    kernel(program, grid.data(), grid.size(), whole.view());
    const std::size_t cut = 13; // not a multiple of any lane width
    kernel(program, grid.data(), cut, split.view());
    kernel(program, grid.data() + cut, grid.size() - cut, split.view().offset(cut));

    CHECK(std::memcmp(whole.m11r.data(), split.m11r.data(), grid.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(whole.m22i.data(), split.m22i.data(), grid.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(whole.m21r.data(), split.m21r.data(), grid.size() * sizeof(double)) == 0);
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernel is bit-identical to the scalar reference") {
    if (!avx2_supported()) return;
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const LayerStack stack = testutil::random_stack(rng, 10);
        const StackProgram program = compile_program(stack);
        const auto grid = random_grid(rng, 67);
        MatrixBatch a(grid.size()), b(grid.size());
        scalar_kernel(program, grid.data(), grid.size(), a.view());
        avx2_kernel(program, grid.data(), grid.size(), b.view());
        const std::size_t bytes = grid.size() * sizeof(double);
        CHECK(std::memcmp(a.m11r.data(), b.m11r.data(), bytes) == 0);
        CHECK(std::memcmp(a.m11i.data(), b.m11i.data(), bytes) == 0);
        CHECK(std::memcmp(a.m12r.data(), b.m12r.data(), bytes) == 0);
        CHECK(std::memcmp(a.m12i.data(), b.m12i.data(), bytes) == 0);
        CHECK(std::memcmp(a.m21r.data(), b.m21r.data(), bytes) == 0);
        CHECK(std::memcmp(a.m21i.data(), b.m21i.data(), bytes) == 0);
        CHECK(std::memcmp(a.m22r.data(), b.m22r.data(), bytes) == 0);
        CHECK(std::memcmp(a.m22i.data(), b.m22i.data(), bytes) == 0);
    }
}
#endif

#if defined(__aarch64__)
TEST_CASE("neon kernel is bit-identical to the scalar reference") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const LayerStack stack = testutil::random_stack(rng, 10);
        const StackProgram program = compile_program(stack);
        const auto grid = random_grid(rng, 67);
        MatrixBatch a(grid.size()), b(grid.size());
        scalar_kernel(program, grid.data(), grid.size(), a.view());
        neon_kernel(program, grid.data(), grid.size(), b.view());
        const std::size_t bytes = grid.size() * sizeof(double);
        CHECK(std::memcmp(a.m11r.data(), b.m11r.data(), bytes) == 0);
        CHECK(std::memcmp(a.m22i.data(), b.m22i.data(), bytes) == 0);
    }
}
#endif

TEST_CASE("kernel dispatch: names, explicit choice and env override") {
    const char* ambient = getenv("MONODROMY_KERNEL");
    const std::string saved = ambient ? ambient : "";
    unsetenv("MONODROMY_KERNEL");

    CHECK(kernel_name(select_kernel(KernelChoice::Scalar)) == std::string("scalar"));
    CHECK_THROWS_AS(kernel_choice_from_name("sse9"), ConfigError);

    const KernelFn automatic = select_kernel();
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) CHECK(kernel_name(automatic) == std::string("avx2"));
#else
    CHECK(kernel_name(automatic) != std::string("avx2"));
#endif

    setenv("MONODROMY_KERNEL", "scalar", 1);
    CHECK(kernel_name(select_kernel()) == std::string("scalar"));
    if (ambient)
        setenv("MONODROMY_KERNEL", saved.c_str(), 1);
    else
        unsetenv("MONODROMY_KERNEL");
}

TEST_CASE("sweeps under different kernels produce identical spectra") {
    std::mt19937_64 rng(103);
    const LayerStack stack = testutil::random_stack(rng, 7);
    const auto grid = linspace(0.05, 2.8, 513);
    SweepOptions scalar_opt, auto_opt;
    scalar_opt.kernel = KernelChoice::Scalar;
    auto_opt.kernel = KernelChoice::Auto;
    const Spectrum a = sweep(stack, grid, DispersionModel::electromagnetic(), scalar_opt);
    const Spectrum b = sweep(stack, grid, DispersionModel::electromagnetic(), auto_opt);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points[i].T == b.points[i].T);
        CHECK(a.points[i].R == b.points[i].R);
        CHECK(a.unwrapped_phibar2[i] == b.unwrapped_phibar2[i]);
        CHECK(a.t_monodromy[i] == b.t_monodromy[i]);
    }
}
