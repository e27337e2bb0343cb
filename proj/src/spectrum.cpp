#include "monodromy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

void check_grid(const std::vector<double>& grid) {
    if (grid.size() < 3) throw ConfigError("grid needs at least 3 points");
    if (!(grid.front() > 0.0)) throw ConfigError("grid wavenumbers must be positive");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw ConfigError("grid must be strictly increasing");
}

BandFlag classify(double half_trace_abs, double edge_tol) {
    if (std::abs(half_trace_abs - 1.0) <= edge_tol) return BandFlag::Edge;
    return half_trace_abs <= 1.0 ? BandFlag::Allowed : BandFlag::Forbidden;
}

} // namespace

const char* band_flag_name(BandFlag f) {
    switch (f) {
    case BandFlag::Allowed: return "allowed";
    case BandFlag::Forbidden: return "forbidden";
    case BandFlag::Edge: return "edge";
    }
    return "?";
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return g;
}

std::vector<double> unwrap(const std::vector<double>& phases, double period) {
    std::vector<double> out(phases.size());
    if (phases.empty()) return out;
    auto wrap = [period](double x) { return x - period * std::ceil((x - 0.5 * period) / period); };
    out[0] = wrap(phases[0]);
    for (std::size_t i = 1; i < phases.size(); ++i)
        out[i] = out[i - 1] + wrap(phases[i] - phases[i - 1]);
    return out;
}

std::vector<double> derivative(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n < 3) return d;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = x[i] - x[i - 1];
        const double h2 = x[i + 1] - x[i];
        d[i] = -h2 / (h1 * (h1 + h2)) * f[i - 1] + (h2 - h1) / (h1 * h2) * f[i] +
               h1 / (h2 * (h1 + h2)) * f[i + 1];
    }
    {
        const double h1 = x[1] - x[0], h2 = x[2] - x[1];
        d[0] = -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * f[0] + (h1 + h2) / (h1 * h2) * f[1] -
               h1 / (h2 * (h1 + h2)) * f[2];
    }
    {
        const double h1 = x[n - 2] - x[n - 3], h2 = x[n - 1] - x[n - 2];
        d[n - 1] = h2 / (h1 * (h1 + h2)) * f[n - 3] - (h1 + h2) / (h1 * h2) * f[n - 2] +
                   (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * f[n - 1];
    }
    return d;
}

Spectrum sweep(const LayerStack& stack, const std::vector<double>& grid,
               const DispersionModel& dispersion, const SweepOptions& options) {
    check_grid(grid);
    stack.validate();

    const std::size_t n = grid.size();
    Spectrum s;
    s.k = grid;
    s.d = stack.width();
    s.dispersion = dispersion;
    s.points.resize(n);

    const StackProgram program = compile_program(stack);
    const KernelFn kernel = select_kernel(options.kernel);
    MatrixBatch totals(n);
    MatrixBatchView totals_view = totals.view();

    std::optional<StackProgram> band_program;
    MatrixBatch band_totals(0);
    if (options.band_cell) {
        LayerStack cell_stack;
        cell_stack.layers = *options.band_cell;
        band_program = compile_program(cell_stack);
        band_totals.resize(n);
    }
    MatrixBatchView band_view = band_totals.view();

    const int threads = std::max(1, options.threads);
    auto run_chunk = [&](std::size_t lo, std::size_t hi) {
        kernel(program, grid.data() + lo, hi - lo, totals_view.offset(lo));
        if (band_program)
            kernel(*band_program, grid.data() + lo, hi - lo, band_view.offset(lo));
        for (std::size_t i = lo; i < hi; ++i) {
            ScatteringResult& r = s.points[i];
            r.k = grid[i];
            r.d = s.d;
            const TransferMatrix m = totals.matrix(i);
            const Amplitudes a = amplitudes(m, stack, grid[i]);
            r.T = a.T;
            r.R = a.R;
            const PhaseDecomposition p = phase_decomposition(m, a.T, a.R);
            r.phi1 = p.phi1;
            r.phibar2 = p.phibar2;
            r.delta_phi = p.delta_phi;
            r.comps = components(m);
        }
    };

    if (threads == 1 || n < 8) {
        run_chunk(0, n);
    } else {
        // fixed per-point work written into preallocated slots: any schedule
        // produces identical output
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = std::min(n, std::size_t(t) * chunk);
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(run_chunk, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // band classification
    s.trace_half_re.resize(n);
    s.band_flag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const TransferMatrix m = band_program ? band_totals.matrix(i) : totals.matrix(i);
        const cplx tr = trace_half(m);
        s.trace_half_re[i] = tr.real();
        s.band_flag[i] = classify(std::abs(tr), options.band_edge_tol);
    }

    // sequential post-passes: unwrap, differentiate, times
    std::vector<double> phibar2(n), dphi(n), phi1(n);
    for (std::size_t i = 0; i < n; ++i) {
        phibar2[i] = s.points[i].phibar2;
        dphi[i] = s.points[i].delta_phi;
        phi1[i] = s.points[i].phi1;
    }
    s.unwrapped_phibar2 = unwrap(phibar2);
    s.unwrapped_delta_phi = unwrap(dphi, M_PI);

    const std::vector<double> slope = derivative(grid, s.unwrapped_phibar2);
    std::vector<double> trans_phase(n), eta(n);
    for (std::size_t i = 0; i < n; ++i) {
        trans_phase[i] = s.unwrapped_phibar2[i] + s.unwrapped_delta_phi[i];
        eta[i] = 0.5 * (s.unwrapped_phibar2[i] - phi1[i]);
    }
    const std::vector<double> trans_slope = derivative(grid, trans_phase);
    const std::vector<double> eta_slope = derivative(grid, eta);

    s.t_monodromy.resize(n);
    s.t_monodromy_trans.resize(n);
    s.t_wigner.resize(n);
    s.speed_ratio.resize(n);
    s.d_pen.resize(n);
    s.boundary.assign(n, 0);
    s.boundary.front() = 1;
    s.boundary.back() = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = dispersion.group_speed(grid[i]);
        s.t_monodromy[i] = (slope[i] + s.d) / v;
        s.t_monodromy_trans[i] = (trans_slope[i] + s.d) / v;
        s.t_wigner[i] = s.d / v + 2.0 * eta_slope[i] / v;
        s.d_pen[i] = 0.5 * (s.d + slope[i]);
        s.speed_ratio[i] = s.d == 0.0 ? 1.0 : s.d / (s.d + slope[i]);
    }
    return s;
}

double monodromy_time(const Spectrum& s, std::size_t i) { return s.t_monodromy.at(i); }
double wigner_time(const Spectrum& s, std::size_t i) { return s.t_wigner.at(i); }
double advance_speed_ratio(const Spectrum& s, std::size_t i) { return s.speed_ratio.at(i); }
double penetration_depth(const Spectrum& s, std::size_t i) { return s.d_pen.at(i); }

std::vector<BandFlag> band_structure(const std::vector<Layer>& cell,
                                     const std::vector<double>& grid, double edge_tol) {
    check_grid(grid);
    LayerStack cell_stack;
    cell_stack.layers = cell;
    std::vector<BandFlag> flags(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const TransferMatrix m = assemble(cell_stack, grid[i]);
        flags[i] = classify(std::abs(trace_half(m)), edge_tol);
    }
    return flags;
}

std::vector<BandInterval> band_intervals(const std::vector<BandFlag>& flags) {
    std::vector<BandInterval> out;
    for (std::size_t i = 0; i < flags.size();) {
        std::size_t j = i;
        while (j + 1 < flags.size() && flags[j + 1] == flags[i]) ++j;
        out.push_back(BandInterval{i, j, flags[i]});
        i = j + 1;
    }
    return out;
}

std::vector<Resonance> resonances(const Spectrum& s, double rel_prominence) {
    std::vector<Resonance> out;
    const std::size_t n = s.size();
    if (n < 3) return out;

    std::vector<double> t2(n);
    for (std::size_t i = 0; i < n; ++i) t2[i] = std::norm(s.points[i].T);
    const auto [mn, mx] = std::minmax_element(t2.begin(), t2.end());
    const double range = *mx - *mn;
    if (range <= 0.0) return out;
    const double threshold = rel_prominence * range;

    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(t2[i] > t2[i - 1] && t2[i] >= t2[i + 1])) continue;
        // valley floor on each side, out to the next higher point or the edge
        double left_min = t2[i], right_min = t2[i];
        for (std::size_t j = i; j-- > 0;) {
            left_min = std::min(left_min, t2[j]);
            if (t2[j] > t2[i]) break;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            right_min = std::min(right_min, t2[j]);
            if (t2[j] > t2[i]) break;
        }
        const double prominence = t2[i] - std::max(left_min, right_min);
        if (prominence < threshold) continue;

        // 3-point parabolic refinement in k
        const double y0 = t2[i - 1], y1 = t2[i], y2 = t2[i + 1];
        const double denom = y0 - 2.0 * y1 + y2;
        double k_ref = s.k[i];
        if (denom < 0.0) {
            const double shift = 0.5 * (y0 - y2) / denom;
            const double h = 0.5 * (s.k[i + 1] - s.k[i - 1]);
            k_ref = s.k[i] + std::clamp(shift, -1.0, 1.0) * h;
        }
        Resonance r;
        r.k = k_ref;
        r.f_GHz = s.dispersion.electromagnetic_kind() ? s.dispersion.frequency_GHz(k_ref) : 0.0;
        r.T2_peak = t2[i];
        r.prominence = prominence;
        out.push_back(r);
    }
    return out;
}

} // namespace monodromy
