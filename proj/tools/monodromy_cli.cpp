// Batch front end: sweep barrier stacks over k-grids, locate cavity
// resonances, and cross-check the transfer-product path against the
// interface-matching solver.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "monodromy/csv.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/interface_matching.hpp"
#include "monodromy/presets.hpp"
#include "monodromy/scattering.hpp"
#include "monodromy/spectrum.hpp"
#include "monodromy/stack_config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitVerify = 4;

using namespace monodromy;

struct RunSetup {
    LayerStack stack;
    DispersionModel dispersion;
    std::vector<double> grid;
    std::optional<std::vector<Layer>> band_cell;
    std::optional<double> d_cav;
    std::string label;
};

struct CommonArgs {
    std::string preset;
    std::string config;
    double kmin = 0.0;
    double kmax = 0.0;
    std::size_t points = 0;
    std::string dispersion = "auto"; // em | particle | auto (preset default)
    std::string layer_model = "dielectric";
    double kappa0 = -1.0; // <0: preset default
    int threads = 1;
    std::string kernel = "auto";

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "preset id (see `presets`)");
        cmd->add_option("--config", config, "stack config file");
        cmd->add_option("--kmin", kmin, "grid start [1/mm]");
        cmd->add_option("--kmax", kmax, "grid end [1/mm]");
        cmd->add_option("--points", points, "grid points");
        cmd->add_option("--dispersion", dispersion, "em | particle")
            ->check(CLI::IsMember({"em", "particle", "auto"}));
        cmd->add_option("--layer-model", layer_model,
                        "lattice layer model for the two-lattice presets")
            ->check(CLI::IsMember({"dielectric", "barrier"}));
        cmd->add_option("--kappa0", kappa0, "barrier height [1/mm]");
        cmd->add_option("--threads", threads, "sweep worker threads")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--kernel", kernel, "auto | scalar | avx2 | neon");
    }

    RunSetup resolve() const {
        if (preset.empty() == config.empty())
            throw ConfigError("exactly one of --preset or --config is required");

        RunSetup run;
        if (!preset.empty()) {
            const auto id = preset_from_name(preset);
            if (!id) throw ConfigError("unknown preset '" + preset + "'");
            PresetOverrides ov;
            if (kappa0 >= 0.0) ov.kappa0 = kappa0;
            ov.layer_model = layer_model == "barrier" ? LatticeLayerModel::SquareBarrier
                                                      : LatticeLayerModel::Dielectric;
            Preset p = build_preset(*id, ov);
            run.stack = p.stack;
            run.dispersion = p.dispersion;
            run.grid = p.grid;
            run.band_cell = p.band_cell;
            run.d_cav = p.d_cav;
            run.label = p.name;
        } else {
            run.stack = load_stack_config(config);
            run.dispersion = DispersionModel::electromagnetic();
            run.label = config;
        }
        if (dispersion == "em") run.dispersion = DispersionModel::electromagnetic();
        if (dispersion == "particle") run.dispersion = DispersionModel::massive_particle();

        const bool custom_grid = kmin != 0.0 || kmax != 0.0 || points != 0;
        if (custom_grid || run.grid.empty()) {
            if (!(kmin > 0.0) || !(kmax > kmin) || points < 3)
                throw ConfigError("grid requires --kmin > 0, --kmax > kmin, --points >= 3");
            run.grid = linspace(kmin, kmax, points);
        }
        return run;
    }

    SweepOptions sweep_options(const RunSetup& run) const {
        SweepOptions opt;
        opt.threads = threads;
        opt.kernel = kernel_choice_from_name(kernel);
        opt.band_cell = run.band_cell;
        return opt;
    }
};

int cmd_sweep(const CommonArgs& args, const std::string& out_path) {
    const RunSetup run = args.resolve();
    const Spectrum s = sweep(run.stack, run.grid, run.dispersion, args.sweep_options(run));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
    write_sweep_csv(s, out);
    out.flush();
    if (!out) throw ConfigError("failed writing '" + out_path + "'");
    return 0;
}

int cmd_resonances(const CommonArgs& args, double prominence) {
    const RunSetup run = args.resolve();
    const Spectrum s = sweep(run.stack, run.grid, run.dispersion, args.sweep_options(run));
    const auto peaks = resonances(s, prominence);

    std::printf("# %s: %zu resonance(s), prominence >= %s of |T|^2 range\n", run.label.c_str(),
                peaks.size(), format_sig12(prominence).c_str());
    const bool em = s.dispersion.electromagnetic_kind();
    for (const auto& r : peaks) {
        if (em)
            std::printf("k=%s 1/mm  f=%s GHz  |T|^2=%s\n", format_sig12(r.k).c_str(),
                        format_sig12(r.f_GHz).c_str(), format_sig12(r.T2_peak).c_str());
        else
            std::printf("k=%s 1/mm  |T|^2=%s\n", format_sig12(r.k).c_str(),
                        format_sig12(r.T2_peak).c_str());
    }
    if (em) {
        const double c = DispersionModel::c_mm_per_ns;
        if (run.d_cav)
            std::printf("naive f_res = c/(2 d_cav)  = %s GHz (d_cav = %s mm)\n",
                        format_sig12(c / (2.0 * *run.d_cav)).c_str(),
                        format_sig12(*run.d_cav).c_str());
        const double d = run.stack.width();
        if (d > 0.0)
            std::printf("naive f_res = c/(2 d_total) = %s GHz (d_total = %s mm)\n",
                        format_sig12(c / (2.0 * d)).c_str(), format_sig12(d).c_str());
    }
    return 0;
}

int cmd_verify(const CommonArgs& args, bool corrupt) {
    const RunSetup run = args.resolve();
    constexpr double tol = 1e-9;

    double max_dT = 0.0, max_dR = 0.0, at_k = 0.0;
    for (double k : run.grid) {
        ScatteringResult sr = scatter(run.stack, k);
        if (corrupt) sr.T *= 1.0 + 1e-6; // test hook: negative control
        const MatchedAmplitudes ma = match_interfaces(run.stack, k);
        const double dT = std::abs(sr.T - ma.T);
        const double dR = std::abs(sr.R - ma.R);
        if (std::max(dT, dR) > std::max(max_dT, max_dR)) at_k = k;
        max_dT = std::max(max_dT, dT);
        max_dR = std::max(max_dR, dR);
    }
    std::printf("transfer vs interface matching over %zu points:\n", run.grid.size());
    std::printf("  max |dT| = %.3e   max |dR| = %.3e   (worst near k = %s)\n", max_dT, max_dR,
                format_sig12(at_k).c_str());

    bool phase_ok = true;
    if (run.stack.layers.size() == 1 &&
        run.stack.layers.front().kind == LayerKind::SquareBarrier) {
        const Layer& b = run.stack.layers.front();
        double max_dphi = 0.0;
        for (double k : run.grid) {
            if (k >= b.kappa0) continue;
            const ScatteringResult sr = scatter(run.stack, k);
            const auto cf = single_barrier_closed_form(b.kappa0, b.halfwidth, k);
            max_dphi = std::max(max_dphi,
                                std::abs(wrap_angle(sr.phibar2 - cf.phibar2)));
        }
        std::printf("  single barrier closed-form phase: max |d arg T| = %.3e (mod 2 pi)\n",
                    max_dphi);
        phase_ok = max_dphi < tol;
    }

    const bool ok = max_dT < tol && max_dR < tol && phase_ok;
    std::printf("%s (tolerance %.0e)\n", ok ? "PASS" : "FAIL", tol);
    return ok ? 0 : kExitVerify;
}

int cmd_presets() {
    for (PresetId id : all_preset_ids()) {
        const Preset p = build_preset(id);
        std::printf("%-28s %s\n", p.name.c_str(), p.description.c_str());
        std::printf("%-28s   d = %g mm, %zu layers, grid [%g, %g] x %zu, %s dispersion\n", "",
                    p.stack.width(), p.stack.layers.size(), p.grid.front(), p.grid.back(),
                    p.grid.size(),
                    p.dispersion.electromagnetic_kind() ? "electromagnetic" : "particle");
        for (const auto& [key, value] : p.annotations)
            std::printf("%-28s   %s = %g\n", "", key.c_str(), value);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transfer-matrix transmission, phases and tunneling times for 1D barrier stacks"};
    app.require_subcommand(1);

    CommonArgs sweep_args, res_args, verify_args;
    std::string out_path;
    double prominence = 0.10;
    bool corrupt = false;

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a k-grid and write CSV");
    sweep_args.attach(sweep_cmd);
    sweep_cmd->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* res_cmd = app.add_subcommand("resonances", "report |T|^2 peaks");
    res_args.attach(res_cmd);
    res_cmd->add_option("--prominence", prominence,
                        "relative prominence threshold (fraction of |T|^2 range)");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare transfer products against interface matching");
    verify_args.attach(verify_cmd);
    verify_cmd->add_flag("--corrupt", corrupt)->group(""); // hidden test hook

    CLI::App* presets_cmd = app.add_subcommand("presets", "list shipped presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args, out_path);
        if (res_cmd->parsed()) return cmd_resonances(res_args, prominence);
        if (verify_cmd->parsed()) return cmd_verify(verify_args, corrupt);
        if (presets_cmd->parsed()) return cmd_presets();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return kExitGeometry;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
