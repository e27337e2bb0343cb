#include "monodromy/interface_matching.hpp"

#include <cmath>
#include <vector>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

constexpr cplx kI{0.0, 1.0};

// A region of nonzero width with wave basis e^{+iq(x-xl)}, e^{-iq(x-xl)};
// q is chosen so e^{iq x} decays to the right under a barrier.  |q| ~ 0
// (exact threshold) switches to the degenerate linear basis (1, x-xl).
struct Region {
    cplx q;
    double w;
    bool linear = false;
};

struct Problem {
    std::vector<Region> regions;
    std::vector<double> iface_lambda; // regions.size() + 1 interfaces
};

cplx region_wavevector(const Layer& l, double k) {
    switch (l.kind) {
    case LayerKind::Gap:
        return cplx{k, 0.0};
    case LayerKind::Dielectric:
        return cplx{l.n * k, 0.0};
    case LayerKind::SquareBarrier: {
        const double a = l.kappa0 * l.kappa0 - k * k;
        if (a >= 0.0) return cplx{0.0, std::sqrt(a)};
        return cplx{std::sqrt(-a), 0.0};
    }
    case LayerKind::DeltaBarrier:
        break;
    }
    return cplx{k, 0.0};
}

Problem build_problem(const LayerStack& stack, double k) {
    Problem p;
    p.iface_lambda.push_back(0.0);
    for (const Layer& l : stack.layers) {
        if (l.kind == LayerKind::DeltaBarrier) {
            p.iface_lambda.back() += l.lambda;
            continue;
        }
        const double w = l.width();
        if (w == 0.0) continue;
        Region r;
        r.q = region_wavevector(l, k);
        r.w = w;
        r.linear = std::abs(r.q) * w < 1e-9;
        p.regions.push_back(r);
        p.iface_lambda.push_back(0.0);
    }
    return p;
}

// Basis values/derivatives of region functions at the region's edges.
struct Edge {
    cplx f1, f2;   // function values
    cplx d1, d2;   // derivatives
};

Edge left_edge(const Region& r) {
    if (r.linear) return Edge{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}};
    return Edge{cplx{1.0}, cplx{1.0}, kI * r.q, -kI * r.q};
}

Edge right_edge(const Region& r) {
    if (r.linear) return Edge{cplx{1.0}, cplx{r.w}, cplx{0.0}, cplx{1.0}};
    const cplx ep = std::exp(kI * r.q * r.w);
    const cplx em = std::exp(-kI * r.q * r.w);
    return Edge{ep, em, kI * r.q * ep, -kI * r.q * em};
}

// Dense complex LU with partial pivoting, solves A x = b in place.
void lu_solve(std::vector<cplx>& A, std::vector<cplx>& b, std::size_t n) {
    double max_abs = 0.0;
    for (const cplx& z : A) max_abs = std::max(max_abs, std::abs(z));
    if (max_abs == 0.0) throw IllConditionedError("matching system is zero", 0.0);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(A[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(A[r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best <= 1e-13 * max_abs)
            throw IllConditionedError("matching system numerically singular",
                                      best / max_abs);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        const cplx inv = 1.0 / A[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = A[r * n + col] * inv;
            if (f == cplx{0.0}) continue;
            A[r * n + col] = cplx{0.0};
            for (std::size_t c = col + 1; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        cplx acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= A[r * n + c] * b[c];
        b[r] = acc / A[r * n + r];
    }
}

} // namespace

MatchedAmplitudes match_interfaces(const LayerStack& stack, double k) {
    stack.validate();
    if (!(k > 0.0)) throw NumericDomainError("match_interfaces: k must be positive");

    const Problem p = build_problem(stack, k);
    const std::size_t m = p.regions.size();

    // interface coordinates
    std::vector<double> xi(m + 1);
    xi[0] = stack.left_edge();
    for (std::size_t j = 0; j < m; ++j) xi[j + 1] = xi[j] + p.regions[j].w;

    if (m == 0 && p.iface_lambda[0] == 0.0) return MatchedAmplitudes{cplx{1.0}, cplx{0.0}};

    // unknowns: [r, A_1, B_1, ..., A_m, B_m, t_loc]
    const std::size_t nu = 2 * m + 2;
    std::vector<cplx> A(nu * nu, cplx{0.0});
    std::vector<cplx> b(nu, cplx{0.0});
    auto at = [&](std::size_t row, std::size_t col) -> cplx& { return A[row * nu + col]; };

    for (std::size_t i = 0; i <= m; ++i) {
        const std::size_t row_val = 2 * i;
        const std::size_t row_der = 2 * i + 1;
        const double lam = p.iface_lambda[i];

        // left side of interface i
        cplx lv1, lv2, ld1, ld2; // value/derivative coefficients of the two left unknowns
        std::size_t lc1, lc2;    // their column indices
        bool left_has_incident = (i == 0);
        if (i == 0) {
            lc1 = lc2 = 0; // only r
            lv1 = std::exp(-kI * k * xi[0]);
            ld1 = -kI * k * lv1;
            lv2 = ld2 = cplx{0.0};
        } else {
            const Edge e = right_edge(p.regions[i - 1]);
            lc1 = 1 + 2 * (i - 1);
            lc2 = lc1 + 1;
            lv1 = e.f1;
            lv2 = e.f2;
            ld1 = e.d1;
            ld2 = e.d2;
        }

        // right side of interface i
        cplx rv1, rv2, rd1, rd2;
        std::size_t rc1, rc2;
        if (i == m) {
            rc1 = rc2 = nu - 1; // only t_loc
            rv1 = cplx{1.0};
            rd1 = kI * k;
            rv2 = rd2 = cplx{0.0};
        } else {
            const Edge e = left_edge(p.regions[i]);
            rc1 = 1 + 2 * i;
            rc2 = rc1 + 1;
            rv1 = e.f1;
            rv2 = e.f2;
            rd1 = e.d1;
            rd2 = e.d2;
        }

        // continuity: psi_R - psi_L = [incident]
        at(row_val, rc1) += rv1;
        if (rc2 != rc1) at(row_val, rc2) += rv2;
        at(row_val, lc1) -= lv1;
        if (lc2 != lc1) at(row_val, lc2) -= lv2;

        // jump: psi'_R - psi'_L - lam * psi_L = [incident]
        at(row_der, rc1) += rd1;
        if (rc2 != rc1) at(row_der, rc2) += rd2;
        at(row_der, lc1) -= ld1 + lam * lv1;
        if (lc2 != lc1) at(row_der, lc2) -= ld2 + lam * lv2;

        if (left_has_incident) {
            const cplx inc = std::exp(kI * k * xi[0]);
            b[row_val] += inc;
            b[row_der] += kI * k * inc + lam * inc;
        }
    }

    lu_solve(A, b, nu);

    const cplx r = b[0];
    const cplx t_loc = b[nu - 1];
    const double x_right = xi[m];
    return MatchedAmplitudes{t_loc * std::exp(-kI * k * x_right), r};
}

SingleBarrierClosedForm single_barrier_closed_form(double kappa0, double halfwidth, double k) {
    if (!(k > 0.0)) throw NumericDomainError("single_barrier_closed_form: k must be positive");
    const double eps = halfwidth;
    const double d = 2.0 * eps;
    const double a = kappa0 * kappa0 - k * k;

    double fluegge_atan; // atan(tanh(kappa eps)/sigma), continued across threshold
    double phi1_raw;     // atan(2 sigma / ((1+sigma^2) sinh(2 kappa eps)))
    if (a >= 0.0) {
        const double kap = std::sqrt(a);
        const double sig = kap / k;
        fluegge_atan = kap == 0.0 ? std::atan(k * eps)
                                  : std::atan(std::tanh(kap * eps) / sig);
        const double s2 = std::sinh(2.0 * kap * eps);
        phi1_raw = kap == 0.0 ? 0.5 * M_PI
                              : std::atan2(2.0 * sig, (1.0 + sig * sig) * s2);
    } else {
        const double zeta = std::sqrt(-a); // |kappa| above the barrier
        fluegge_atan = std::atan((k / zeta) * std::tan(zeta * eps));
        // 1 + sigma^2 -> kappa0^2/k^2, sinh -> i sin
        const double denom = (kappa0 * kappa0 / (k * k)) * std::sin(2.0 * zeta * eps);
        phi1_raw = std::atan2(2.0 * zeta / k, denom);
    }

    SingleBarrierClosedForm out;
    out.abs_T = std::abs(std::sin(phi1_raw));
    out.phi1 = std::asin(out.abs_T);
    out.phibar2 = -k * d + 2.0 * fluegge_atan + phi1_raw - 0.5 * M_PI;
    out.eta = -0.5 * k * d + fluegge_atan - 0.25 * M_PI;
    return out;
}

} // namespace monodromy
