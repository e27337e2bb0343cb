#include "monodromy/layer.hpp"

#include <cmath>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

void require_positive_k(double k) {
    if (!(k > 0.0) || !std::isfinite(k))
        throw NumericDomainError("wavenumber k must be positive and finite");
}

// Entries are analytic in kappa^2; below this threshold on |kappa^2| the
// sinh/kappa ratios are evaluated by series to dodge the removable 0/0.
constexpr double kSeriesWindow = 1e-12; // (1e-6 / mm)^2

// Canonical components of a square-barrier-like element with
// kappa^2 = kappa0^2 - k^2 passed directly as `a` (negative = propagating).
ElementXYV barrier_xyv_from_kappa_sq(double a, double eps, double k) {
    ElementXYV e;
    if (a > kSeriesWindow) {
        const double kap = std::sqrt(a);
        const double s = std::sinh(2.0 * kap * eps);
        e.x = std::cosh(2.0 * kap * eps);
        e.y = 0.5 * ((k / kap) * s - (kap / k) * s);
        e.v = 0.5 * ((k / kap) * s + (kap / k) * s);
    } else if (a < -kSeriesWindow) {
        const double q = std::sqrt(-a);
        const double s = std::sin(2.0 * q * eps);
        e.x = std::cos(2.0 * q * eps);
        e.y = 0.5 * ((k / q) * s + (q / k) * s);
        e.v = 0.5 * ((k / q) * s - (q / k) * s);
    } else {
        // 3-term expansions of cosh(2 kappa eps), (k/kappa) sinh(2 kappa eps)
        // and (kappa/k) sinh(2 kappa eps) in a = kappa^2.
        const double e2 = eps * eps;
        const double x = 1.0 + 2.0 * a * e2 + (2.0 / 3.0) * a * a * e2 * e2;
        const double over = k * (2.0 * eps + (4.0 / 3.0) * a * eps * e2 +
                                 (4.0 / 15.0) * a * a * eps * e2 * e2);
        const double under = (2.0 * a * eps + (4.0 / 3.0) * a * a * eps * e2) / k;
        e.x = x;
        e.y = 0.5 * (over - under);
        e.v = 0.5 * (over + under);
    }
    return e;
}

TransferMatrix from_xyv(const ElementXYV& e) {
    return TransferMatrix{cplx{e.x, e.y}, cplx{-e.v, 0.0}, cplx{-e.v, 0.0}, cplx{e.x, -e.y}};
}

} // namespace

double Layer::width() const {
    switch (kind) {
    case LayerKind::SquareBarrier:
    case LayerKind::Dielectric:
        return 2.0 * halfwidth;
    case LayerKind::DeltaBarrier:
        return 0.0;
    case LayerKind::Gap:
        return gap;
    }
    return 0.0;
}

Layer Layer::square_barrier(double width_mm, double kappa0_per_mm) {
    Layer l;
    l.kind = LayerKind::SquareBarrier;
    l.halfwidth = 0.5 * width_mm;
    l.kappa0 = kappa0_per_mm;
    return l;
}

Layer Layer::delta_barrier(double lambda_per_mm) {
    Layer l;
    l.kind = LayerKind::DeltaBarrier;
    l.lambda = lambda_per_mm;
    return l;
}

Layer Layer::dielectric(double width_mm, double refractive_index) {
    Layer l;
    l.kind = LayerKind::Dielectric;
    l.halfwidth = 0.5 * width_mm;
    l.n = refractive_index;
    return l;
}

Layer Layer::free_gap(double width_mm) {
    Layer l;
    l.kind = LayerKind::Gap;
    l.gap = width_mm;
    return l;
}

bool operator==(const Layer& a, const Layer& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case LayerKind::SquareBarrier:
        return a.halfwidth == b.halfwidth && a.kappa0 == b.kappa0;
    case LayerKind::DeltaBarrier:
        return a.lambda == b.lambda;
    case LayerKind::Dielectric:
        return a.halfwidth == b.halfwidth && a.n == b.n;
    case LayerKind::Gap:
        return a.gap == b.gap;
    }
    return false;
}

double LayerStack::width() const {
    double d = 0.0;
    for (const Layer& l : layers) d += l.width();
    return d;
}

void LayerStack::validate() const {
    if (!std::isfinite(origin)) throw GeometryError("stack origin is not finite");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const Layer& l = layers[i];
        const std::string at = "layer " + std::to_string(i + 1) + ": ";
        switch (l.kind) {
        case LayerKind::SquareBarrier:
            if (!(l.halfwidth >= 0.0) || !std::isfinite(l.halfwidth))
                throw GeometryError(at + "barrier width must be >= 0");
            if (!(l.kappa0 >= 0.0) || !std::isfinite(l.kappa0))
                throw GeometryError(at + "kappa0 must be >= 0");
            break;
        case LayerKind::DeltaBarrier:
            if (!std::isfinite(l.lambda)) throw GeometryError(at + "lambda must be finite");
            break;
        case LayerKind::Dielectric:
            if (!(l.halfwidth >= 0.0) || !std::isfinite(l.halfwidth))
                throw GeometryError(at + "dielectric width must be >= 0");
            if (!(l.n >= 1.0) || !std::isfinite(l.n))
                throw GeometryError(at + "refractive index must be >= 1");
            break;
        case LayerKind::Gap:
            if (!(l.gap >= 0.0) || !std::isfinite(l.gap))
                throw GeometryError(at + "gap width must be >= 0");
            break;
        }
    }
}

LayerStack LayerStack::reversed() const {
    LayerStack r = *this;
    std::reverse(r.layers.begin(), r.layers.end());
    return r;
}

bool LayerStack::mirror_symmetric() const {
    const std::size_t n = layers.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (!(layers[i] == layers[n - 1 - i])) return false;
    return true;
}

double DispersionModel::frequency_GHz(double k) const {
    return c_mm_per_ns * k / (2.0 * M_PI);
}

cplx kappa(double kappa0, double k) {
    require_positive_k(k);
    if (!(kappa0 >= 0.0) || !std::isfinite(kappa0))
        throw NumericDomainError("kappa0 must be >= 0 and finite");
    const double a = kappa0 * kappa0 - k * k;
    if (a >= 0.0) return cplx{std::sqrt(a), 0.0};
    return cplx{0.0, std::sqrt(-a)};
}

ElementXYV square_barrier_xyv(double kappa0, double halfwidth, double k) {
    require_positive_k(k);
    return barrier_xyv_from_kappa_sq(kappa0 * kappa0 - k * k, halfwidth, k);
}

ElementXYV dielectric_xyv(double n, double halfwidth, double k) {
    require_positive_k(k);
    // internal wavevector q = n k, i.e. kappa^2 = -(n k)^2
    return barrier_xyv_from_kappa_sq(-(n * k) * (n * k), halfwidth, k);
}

ElementXYV delta_xyv(double lambda, double k) {
    require_positive_k(k);
    const double u = lambda / (2.0 * k);
    return ElementXYV{1.0, -u, u};
}

ElementXYV gap_xyv(double width, double k) {
    require_positive_k(k);
    return ElementXYV{std::cos(k * width), std::sin(k * width), 0.0};
}

ElementXYV element_xyv(const Layer& layer, double k) {
    switch (layer.kind) {
    case LayerKind::SquareBarrier:
        return square_barrier_xyv(layer.kappa0, layer.halfwidth, k);
    case LayerKind::Dielectric:
        return dielectric_xyv(layer.n, layer.halfwidth, k);
    case LayerKind::DeltaBarrier:
        return delta_xyv(layer.lambda, k);
    case LayerKind::Gap:
        return gap_xyv(layer.gap, k);
    }
    return ElementXYV{};
}

TransferMatrix barrier_matrix(const Layer& layer, double k) {
    return from_xyv(square_barrier_xyv(layer.kappa0, layer.halfwidth, k));
}

TransferMatrix dielectric_matrix(const Layer& layer, double k) {
    return from_xyv(dielectric_xyv(layer.n, layer.halfwidth, k));
}

TransferMatrix delta_matrix(const Layer& layer, double k) {
    return from_xyv(delta_xyv(layer.lambda, k));
}

TransferMatrix gap_matrix(double width, double k) {
    return from_xyv(gap_xyv(width, k));
}

TransferMatrix layer_matrix(const Layer& layer, double k) {
    return from_xyv(element_xyv(layer, k));
}

} // namespace monodromy
