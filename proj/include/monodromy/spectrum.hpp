#pragma once

// k-grid sweeps: scattering per point, phase unwrapping, numerical
// differentiation, monodromy/Wigner times, advance speeds, penetration
// depth, band classification and resonance extraction.

#include <cstdint>
#include <optional>
#include <vector>

#include "monodromy/kernels.hpp"
#include "monodromy/layer.hpp"
#include "monodromy/scattering.hpp"

namespace monodromy {

enum class BandFlag : std::uint8_t { Allowed, Forbidden, Edge };

const char* band_flag_name(BandFlag f);

struct SweepOptions {
    int threads = 1;                        // per-point evaluation is embarrassingly parallel
    KernelChoice kernel = KernelChoice::Auto;
    std::optional<std::vector<Layer>> band_cell; // unit cell for band classification;
                                                 // total stack matrix when absent
    double band_edge_tol = 1e-9;
};

struct Spectrum {
    std::vector<double> k;          // strictly increasing grid [1/mm]
    std::vector<ScatteringResult> points;
    std::vector<double> trace_half_re;    // Re half-trace of the band matrix
    std::vector<BandFlag> band_flag;
    std::vector<double> unwrapped_phibar2;
    std::vector<double> unwrapped_delta_phi; // period-pi unwrap
    std::vector<double> t_monodromy;         // d(phibar2 + d k)/dk / v
    std::vector<double> t_monodromy_trans;   // transmission variant, + delta_phi
    std::vector<double> t_wigner;            // d/v + 2 d(eta)/dk / v, eta = (phibar2 - phi1)/2
    std::vector<double> speed_ratio;         // (d / t_monodromy) / v
    std::vector<double> d_pen;               // (d + d(phibar2)/dk) / 2
    std::vector<std::uint8_t> boundary;      // 1 where one-sided differences were used
    double d = 0.0;
    DispersionModel dispersion;

    std::size_t size() const { return k.size(); }
};

// Unwrap a phase sequence: first element wrapped to the principal interval,
// adjacent differences within (-period/2, period/2].
std::vector<double> unwrap(const std::vector<double>& phases,
                           double period = 6.283185307179586476925286766559);

// Second-order finite-difference derivative on a (possibly nonuniform) grid;
// one-sided second-order stencils at the two ends.
std::vector<double> derivative(const std::vector<double>& x, const std::vector<double>& f);

// Throws ConfigError for bad grids (need >= 3 strictly increasing k > 0).
Spectrum sweep(const LayerStack& stack, const std::vector<double>& grid,
               const DispersionModel& dispersion, const SweepOptions& options = {});

std::vector<double> linspace(double lo, double hi, std::size_t n);

// Accessors matching the per-index operations; boundary indices use the
// stored one-sided values (flagged in Spectrum::boundary).
double monodromy_time(const Spectrum& s, std::size_t i);
double wigner_time(const Spectrum& s, std::size_t i);
double advance_speed_ratio(const Spectrum& s, std::size_t i);
double penetration_depth(const Spectrum& s, std::size_t i);

// Band classification of a unit cell over a grid: allowed where
// |Tr(cell)/2| <= 1, Edge within `edge_tol` of the boundary.
std::vector<BandFlag> band_structure(const std::vector<Layer>& cell,
                                     const std::vector<double>& grid,
                                     double edge_tol = 1e-9);

struct Resonance {
    double k = 0.0;          // refined by 3-point parabolic interpolation
    double f_GHz = 0.0;      // 0 unless electromagnetic dispersion
    double T2_peak = 0.0;    // |T|^2 at the (unrefined) grid maximum
    double prominence = 0.0;
};

// Local maxima of |T|^2 whose prominence exceeds `rel_prominence` times the
// full |T|^2 range of the spectrum.
std::vector<Resonance> resonances(const Spectrum& s, double rel_prominence = 0.10);

// Contiguous [first, last] index ranges sharing a band flag.
struct BandInterval {
    std::size_t first;
    std::size_t last;
    BandFlag flag;
};
std::vector<BandInterval> band_intervals(const std::vector<BandFlag>& flags);

} // namespace monodromy
