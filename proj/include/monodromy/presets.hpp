#pragma once

// Canonical stack builders: single barriers, double barrier, the two-lattice
// microwave setups and the ten-delta chain, each with its default k-grid and
// dispersion model.

#include <optional>
#include <string>
#include <vector>

#include "monodromy/layer.hpp"
#include "monodromy/spectrum.hpp"

namespace monodromy {

enum class PresetId {
    Fig4SingleBarrier,
    Fig5NimtzSingle,
    Fig6DoubleBarrier,
    NimtzSetupA,
    NimtzSetupB_TwoBarrier,
    NimtzSetupB_EightBarrier,
    Kiang10Delta,
};

enum class LatticeLayerModel { Dielectric, SquareBarrier };

struct PresetOverrides {
    std::optional<double> kappa0;               // barrier height [1/mm]
    std::optional<LatticeLayerModel> layer_model; // two-lattice presets only
};

struct Preset {
    PresetId id;
    std::string name;        // CLI-addressable id
    std::string description;
    LayerStack stack;
    DispersionModel dispersion;
    std::vector<double> grid;                 // default k grid (1000 points)
    std::optional<std::vector<Layer>> band_cell;
    std::optional<double> d_cav;              // cavity width for the two-lattice setups [mm]
    std::vector<std::pair<std::string, double>> annotations;
};

const std::vector<PresetId>& all_preset_ids();
const char* preset_name(PresetId id);
std::optional<PresetId> preset_from_name(const std::string& name);

// Throws PresetIntegrityError if the assembled stack fails its documented
// total-width identity.
Preset build_preset(PresetId id, const PresetOverrides& overrides = {});

} // namespace monodromy
