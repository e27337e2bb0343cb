#include <doctest.h>

#include <random>

#include "monodromy/scattering.hpp"
#include "monodromy/transfer_matrix.hpp"
#include "test_util.hpp"

using namespace monodromy;
using testutil::entry_distance;
using testutil::random_canonical;

TEST_CASE("multiply: identity and inverse") {
    std::mt19937_64 rng(7);
    const TransferMatrix b = random_canonical(rng);
    CHECK(entry_distance(multiply(TransferMatrix::identity(), b), b) == 0.0);

    const TransferMatrix prod = multiply(b, unimodular_inverse(b));
    CHECK(entry_distance(prod, TransferMatrix::identity()) < 1e-12);
}

TEST_CASE("multiply: unimodularity preserved over random canonical pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const TransferMatrix a = random_canonical(rng);
        const TransferMatrix b = random_canonical(rng);
        REQUIRE(std::abs(determinant(a) - 1.0) < 1e-12);
        REQUIRE(std::abs(determinant(b) - 1.0) < 1e-12);
        CHECK(std::abs(determinant(multiply(a, b)) - 1.0) < 1e-10);
    }
}

TEST_CASE("multiply: canonical form is closed under composition") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const TransferMatrix p = multiply(random_canonical(rng), random_canonical(rng));
        CHECK(canonical_residual(p) < 1e-9);
    }
}

TEST_CASE("multiply: rejects non-finite entries") {
    TransferMatrix bad;
    bad.m12 = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_AS(multiply(bad, TransferMatrix::identity()), NumericDomainError);
}

TEST_CASE("determinant: identity and canonical unit") {
    CHECK(determinant(TransferMatrix::identity()) == cplx{1.0, 0.0});
    const TransferMatrix m = MonodromyComponents{1.0, 0.0, 0.0, 0.0}.to_matrix();
    CHECK(std::abs(determinant(m) - 1.0) == 0.0);
}

TEST_CASE("determinant: single-barrier matrices are unimodular") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uw(0.1, 2.0), uk0(0.1, 2.0), uk(0.05, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const Layer b = Layer::square_barrier(uw(rng), uk0(rng));
        const TransferMatrix m = barrier_matrix(b, uk(rng));
        CHECK(std::abs(determinant(m) - 1.0) < 1e-10);
    }
}

TEST_CASE("trace_half: identity, free gap, delta cell") {
    CHECK(trace_half(TransferMatrix::identity()) == cplx{1.0, 0.0});

    const double k = 0.7, width = 1.3;
    CHECK(std::abs(trace_half(gap_matrix(width, k)) - std::cos(k * width)) < 1e-15);

    // cell = gap(1) * delta(5) at k = 1: half trace = cos(1) + (5/2) sin(1)
    const TransferMatrix cell =
        multiply(gap_matrix(1.0, 1.0), delta_matrix(Layer::delta_barrier(5.0), 1.0));
    CHECK(trace_half(cell).real() == doctest::Approx(2.6439797678878811).epsilon(1e-14));
    CHECK(std::abs(trace_half(cell).imag()) < 1e-15);
}

TEST_CASE("components: identity, sign convention, round trip") {
    const MonodromyComponents id = components(TransferMatrix::identity());
    CHECK(id.x == 1.0);
    CHECK(id.y == 0.0);
    CHECK(id.v == 0.0);
    CHECK(id.w == 0.0);

    // m12 = -V - iW = -3 - 4i  ->  V = 3, W = 4
    TransferMatrix m;
    m.m11 = cplx{std::sqrt(1.0 + 9.0 + 16.0), 0.0};
    m.m22 = std::conj(m.m11);
    m.m12 = cplx{-3.0, -4.0};
    m.m21 = std::conj(m.m12);
    const MonodromyComponents c = components(m);
    CHECK(c.v == doctest::Approx(3.0));
    CHECK(c.w == doctest::Approx(4.0));

    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        const TransferMatrix r = random_canonical(rng);
        CHECK(entry_distance(components(r).to_matrix(), r) < 1e-12);
    }
}

TEST_CASE("components: mirror-symmetric stack has w = 0") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        const LayerStack s = testutil::random_symmetric_stack(rng, 3);
        REQUIRE(s.mirror_symmetric());
        const MonodromyComponents c = components(assemble(s, 0.9));
        CHECK(std::abs(c.w) < 1e-9);
    }
}

TEST_CASE("components: non-canonical matrix raises with residual") {
    TransferMatrix m;
    m.m11 = cplx{2.0, 0.0};
    m.m22 = cplx{0.5, 0.0}; // det = 1 but m22 != conj(m11)
    try {
        components(m);
        FAIL("expected FormViolationError");
    } catch (const FormViolationError& e) {
        CHECK(e.residual() == doctest::Approx(1.5));
    }
}
