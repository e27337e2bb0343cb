#pragma once

// Barrier-stack data model and the per-element transfer matrices.
//
// Units: lengths in mm, wavenumbers in 1/mm.  A stack is an ordered,
// contiguous, left-to-right list of elements; element positions, barrier
// centers and inter-barrier spacings are derived quantities.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "monodromy/transfer_matrix.hpp"

namespace monodromy {

enum class LayerKind : std::uint8_t { SquareBarrier, DeltaBarrier, Dielectric, Gap };

struct Layer {
    LayerKind kind = LayerKind::Gap;
    double halfwidth = 0.0; // eps [mm]; square barrier / dielectric half width
    double kappa0 = 0.0;    // barrier height [1/mm]
    double lambda = 0.0;    // delta strength [1/mm]
    double n = 1.0;         // refractive index
    double gap = 0.0;       // free-gap width Delta [mm]

    double width() const;

    static Layer square_barrier(double width_mm, double kappa0_per_mm);
    static Layer delta_barrier(double lambda_per_mm);
    static Layer dielectric(double width_mm, double refractive_index);
    static Layer free_gap(double width_mm);
};

bool operator==(const Layer& a, const Layer& b);

struct LayerStack {
    std::vector<Layer> layers;
    double origin = 0.0; // position of the left edge of the first element [mm]

    double width() const;                    // total width d
    double left_edge() const { return origin; }
    double right_edge() const { return origin + width(); }

    // Throws GeometryError on negative widths / invalid parameters.
    void validate() const;

    LayerStack reversed() const;
    bool mirror_symmetric() const;
};

struct DispersionModel {
    enum class Kind : std::uint8_t { Electromagnetic, MassiveParticle };

    Kind kind = Kind::Electromagnetic;
    double hbar_over_m = 1.0; // massive particle: v(k) = k * hbar/m

    static constexpr double c_mm_per_ns = 299.792458;

    static DispersionModel electromagnetic() { return DispersionModel{}; }
    static DispersionModel massive_particle(double hbar_over_m = 1.0) {
        return DispersionModel{Kind::MassiveParticle, hbar_over_m};
    }

    bool electromagnetic_kind() const { return kind == Kind::Electromagnetic; }
    double group_speed(double k) const {
        return electromagnetic_kind() ? c_mm_per_ns : hbar_over_m * k;
    }
    // f = c k / (2 pi), in GHz for k in 1/mm.
    double frequency_GHz(double k) const;
};

// kappa = sqrt(kappa0^2 - k^2) on the branch Re >= 0, Im >= 0 along the cut.
// Continuous in k across k = kappa0.  Throws NumericDomainError for k <= 0.
cplx kappa(double kappa0, double k);

// Real canonical components (X, Y, V) of a single element; W = 0 for every
// element kind.  Shared by the matrix constructors and the sweep kernels so
// both paths evaluate the same arithmetic.
struct ElementXYV {
    double x = 1.0;
    double y = 0.0;
    double v = 0.0;
};

ElementXYV square_barrier_xyv(double kappa0, double halfwidth, double k);
ElementXYV dielectric_xyv(double n, double halfwidth, double k);
ElementXYV delta_xyv(double lambda, double k);
ElementXYV gap_xyv(double width, double k);
ElementXYV element_xyv(const Layer& layer, double k);

TransferMatrix barrier_matrix(const Layer& layer, double k);
TransferMatrix dielectric_matrix(const Layer& layer, double k);
TransferMatrix delta_matrix(const Layer& layer, double k);
TransferMatrix gap_matrix(double width, double k);
TransferMatrix layer_matrix(const Layer& layer, double k);

} // namespace monodromy
