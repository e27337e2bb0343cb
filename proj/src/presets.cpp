#include "monodromy/presets.hpp"

#include <cmath>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

constexpr double kCarrierGHz = 9.15;
constexpr std::size_t kDefaultPoints = 1000;

double carrier_k() { return 2.0 * M_PI * kCarrierGHz / DispersionModel::c_mm_per_ns; }

// Two photonic lattices of `count` layers (width b, spacing a) around a
// cavity of width d_cav; layers are dielectric slabs (n) or square barriers
// (kappa0) depending on the model flag.
LayerStack two_lattice_stack(int count, double b, double a, double d_cav,
                             LatticeLayerModel model, double n, double kappa0) {
    auto slab = [&]() {
        return model == LatticeLayerModel::Dielectric ? Layer::dielectric(b, n)
                                                      : Layer::square_barrier(b, kappa0);
    };
    LayerStack s;
    for (int i = 0; i < count; ++i) {
        if (i > 0) s.layers.push_back(Layer::free_gap(a));
        s.layers.push_back(slab());
    }
    s.layers.push_back(Layer::free_gap(d_cav));
    for (int i = 0; i < count; ++i) {
        if (i > 0) s.layers.push_back(Layer::free_gap(a));
        s.layers.push_back(slab());
    }
    return s;
}

void check_width(const Preset& p, double expected) {
    if (std::abs(p.stack.width() - expected) > 1e-9)
        throw PresetIntegrityError(std::string(preset_name(p.id)) +
                                   ": total width self-check failed");
}

} // namespace

const std::vector<PresetId>& all_preset_ids() {
    static const std::vector<PresetId> ids = {
        PresetId::Fig4SingleBarrier,        PresetId::Fig5NimtzSingle,
        PresetId::Fig6DoubleBarrier,        PresetId::NimtzSetupA,
        PresetId::NimtzSetupB_TwoBarrier,   PresetId::NimtzSetupB_EightBarrier,
        PresetId::Kiang10Delta,
    };
    return ids;
}

const char* preset_name(PresetId id) {
    switch (id) {
    case PresetId::Fig4SingleBarrier: return "fig4-single-barrier";
    case PresetId::Fig5NimtzSingle: return "fig5-nimtz-single";
    case PresetId::Fig6DoubleBarrier: return "fig6-double-barrier";
    case PresetId::NimtzSetupA: return "nimtz-setup-a";
    case PresetId::NimtzSetupB_TwoBarrier: return "nimtz-setup-b-two-barrier";
    case PresetId::NimtzSetupB_EightBarrier: return "nimtz-setup-b-eight-barrier";
    case PresetId::Kiang10Delta: return "kiang-10-delta";
    }
    return "?";
}

std::optional<PresetId> preset_from_name(const std::string& name) {
    for (PresetId id : all_preset_ids())
        if (name == preset_name(id)) return id;
    return std::nullopt;
}

Preset build_preset(PresetId id, const PresetOverrides& overrides) {
    Preset p;
    p.id = id;
    p.name = preset_name(id);
    p.dispersion = DispersionModel::electromagnetic();

    const LatticeLayerModel model =
        overrides.layer_model.value_or(LatticeLayerModel::Dielectric);
    const double perspex_n = 1.61;

    switch (id) {
    case PresetId::Fig4SingleBarrier: {
        const double kappa0 = overrides.kappa0.value_or(2.5);
        p.description = "single square barrier, 3 mm wide";
        p.stack.layers = {Layer::square_barrier(3.0, kappa0)};
        p.grid = linspace(0.05, 5.0, kDefaultPoints);
        p.annotations.emplace_back("kappa0_per_mm", kappa0);
        check_width(p, 3.0);
        break;
    }
    case PresetId::Fig5NimtzSingle: {
        const double kappa0 = overrides.kappa0.value_or(0.8);
        p.description = "single square barrier, 6 mm wide";
        p.stack.layers = {Layer::square_barrier(6.0, kappa0)};
        p.grid = linspace(0.05, 2.0, kDefaultPoints);
        p.annotations.emplace_back("kappa0_per_mm", kappa0);
        check_width(p, 6.0);
        break;
    }
    case PresetId::Fig6DoubleBarrier: {
        const double kappa0 = overrides.kappa0.value_or(2.5);
        p.description = "two 1 mm square barriers around a 1 mm cavity";
        p.stack.layers = {Layer::square_barrier(1.0, kappa0), Layer::free_gap(1.0),
                          Layer::square_barrier(1.0, kappa0)};
        p.grid = linspace(0.05, 5.0, kDefaultPoints);
        p.annotations.emplace_back("kappa0_per_mm", kappa0);
        check_width(p, 3.0);
        break;
    }
    case PresetId::NimtzSetupA: {
        const double kappa0 = overrides.kappa0.value_or(0.27);
        p.description = "two lattices of four 6 mm layers (12 mm air), 130 mm cavity";
        p.stack = two_lattice_stack(4, 6.0, 12.0, 130.0, model, perspex_n, kappa0);
        p.grid = linspace(0.005, 0.25, kDefaultPoints);
        p.d_cav = 130.0;
        p.annotations.emplace_back("carrier_f_GHz", kCarrierGHz);
        p.annotations.emplace_back("carrier_k_per_mm", carrier_k());
        if (model == LatticeLayerModel::SquareBarrier)
            p.annotations.emplace_back("kappa0_per_mm", kappa0);
        check_width(p, 2.0 * (4 * 6.0 + 3 * 12.0) + 130.0);
        break;
    }
    case PresetId::NimtzSetupB_TwoBarrier: {
        const double kappa0 = overrides.kappa0.value_or(0.27);
        p.description = "one 5 mm layer per lattice, 189 mm cavity (total 199 mm)";
        p.stack = two_lattice_stack(1, 5.0, 8.5, 189.0, model, perspex_n, kappa0);
        p.grid = linspace(0.005, 0.25, kDefaultPoints);
        p.d_cav = 189.0;
        p.annotations.emplace_back("carrier_f_GHz", kCarrierGHz);
        p.annotations.emplace_back("carrier_k_per_mm", carrier_k());
        p.annotations.emplace_back("carrier_k_quoted_per_mm", 0.1769);
        if (model == LatticeLayerModel::SquareBarrier)
            p.annotations.emplace_back("kappa0_per_mm", kappa0);
        check_width(p, 199.0);
        break;
    }
    case PresetId::NimtzSetupB_EightBarrier: {
        const double kappa0 = overrides.kappa0.value_or(0.27);
        p.description = "four 5 mm layers per lattice (8.5 mm air), 189 mm cavity (total 280 mm)";
        p.stack = two_lattice_stack(4, 5.0, 8.5, 189.0, model, perspex_n, kappa0);
        p.grid = linspace(0.005, 0.25, kDefaultPoints);
        p.d_cav = 189.0;
        p.annotations.emplace_back("carrier_f_GHz", kCarrierGHz);
        p.annotations.emplace_back("carrier_k_per_mm", carrier_k());
        p.annotations.emplace_back("carrier_k_quoted_per_mm", 0.1769);
        if (model == LatticeLayerModel::SquareBarrier)
            p.annotations.emplace_back("kappa0_per_mm", kappa0);
        check_width(p, 4 * 5.0 + 3 * 8.5 + 189.0 + 3 * 8.5 + 4 * 5.0);
        break;
    }
    case PresetId::Kiang10Delta: {
        p.description = "ten delta barriers, strength*spacing = 5, unit spacing";
        const double lambda = 5.0;
        for (int i = 0; i < 10; ++i) {
            if (i > 0) p.stack.layers.push_back(Layer::free_gap(1.0));
            p.stack.layers.push_back(Layer::delta_barrier(lambda));
        }
        p.dispersion = DispersionModel::massive_particle();
        p.grid = linspace(0.05, 5.0 * M_PI, kDefaultPoints);
        p.band_cell = std::vector<Layer>{Layer::delta_barrier(lambda), Layer::free_gap(1.0)};
        p.annotations.emplace_back("lambda_per_mm", lambda);
        check_width(p, 9.0);
        break;
    }
    }
    p.stack.validate();
    return p;
}

} // namespace monodromy
