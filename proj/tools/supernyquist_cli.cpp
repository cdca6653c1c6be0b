// supernyquist command-line front end.
//
//   supernyquist diffset  --scheme sn --m 4 --n 3
//   supernyquist weight   --scheme sn --m 4 --n 3 --periods 2 [--closed]
//   supernyquist bias     --scheme prototype --m 4 --n 3 --grid 4096
//   supernyquist spectrum --scheme sn --m 4 --n 3 --k 10 --tones 0.1,0.3
//   supernyquist preset fig5 --out results/
//   supernyquist map-freq --hz 300 --fs 500 --scheme prototype
//   supernyquist run --config experiment.json
//
// Failures exit with status 2 and print one JSON line {"error": CODE, "message": ...}
// on stderr.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "supernyquist/experiments.hpp"

namespace sn = supernyquist;

namespace {

struct Flags {
    std::string config_file;
    std::string scheme;
    int m = 0;
    int n = 0;
    std::vector<int> levels;
    int periods = 0;
    int k = 0;
    int grid = 0;
    std::uint64_t seed = 0;
    std::string tones;
    double noise_std = 0.0;
    std::string out;
    bool closed = false;

    std::vector<CLI::Option*> overrides; // experimental parameters (everything except --out/--config)
    CLI::Option* out_opt = nullptr;
    CLI::Option* config_opt = nullptr;

    void attach(CLI::App* app)
    {
        config_opt = app->add_option("--config", config_file, "JSON experiment config");
        out_opt = app->add_option("--out", out, "output directory (stdout when omitted)");
        overrides = {
            app->add_option("--scheme", scheme, "prototype | super-nyquist | multi-level"),
            app->add_option("--m", m, "co-prime factor M"),
            app->add_option("--n", n, "co-prime factor N"),
            app->add_option("--levels", levels, "multi-level factors, e.g. --levels 2,3,5")->delimiter(','),
            app->add_option("--periods", periods, "co-prime periods per snapshot (r)"),
            app->add_option("--k", k, "number of snapshots"),
            app->add_option("--grid", grid, "frequency grid size over [0, pi]"),
            app->add_option("--seed", seed, "random seed"),
            app->add_option("--tones", tones, "comma list of nu[:amplitude] on the scheme grid"),
            app->add_option("--noise-std", noise_std, "additive white Gaussian noise std"),
        };
    }

    bool any_override() const
    {
        for (auto* o : overrides)
            if (o->count() > 0)
                return true;
        return false;
    }

    static std::vector<sn::Tone> parse_tones(const std::string& text)
    {
        std::vector<sn::Tone> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            sn::Tone t;
            try {
                const auto colon = item.find(':');
                t.nu = std::stod(item.substr(0, colon));
                if (colon != std::string::npos)
                    t.amplitude = std::stod(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw sn::Error(sn::ErrorCode::InvalidConfig, "cannot parse tone '" + item + "'");
            }
            out.push_back(t);
        }
        return out;
    }

    /// Config file first, then explicit flags on top.
    sn::ExperimentConfig resolve() const
    {
        sn::ExperimentConfig cfg;
        if (config_opt->count())
            cfg = sn::load_config(config_file);
        if (cfg.preset && any_override())
            throw sn::Error(sn::ErrorCode::InvalidConfig, "preset configs cannot be combined with parameter flags");
        auto given = [&](std::size_t i) { return overrides[i]->count() > 0; };
        if (given(0))
            cfg.kind = sn::parse_scheme_kind(scheme);
        if (given(1))
            cfg.m = m;
        if (given(2))
            cfg.n = n;
        if (given(3)) {
            cfg.levels = levels;
            if (!given(0))
                cfg.kind = sn::SchemeKind::MultiLevel;
        }
        if (given(4))
            cfg.periods = periods;
        if (given(5))
            cfg.snapshots = k;
        if (given(6))
            cfg.grid = grid;
        if (given(7))
            cfg.signal.seed = seed;
        if (given(8))
            cfg.signal.tones = parse_tones(tones);
        if (given(9))
            cfg.signal.noise_std = noise_std;
        if (out_opt->count())
            cfg.out_dir = out;
        return cfg;
    }
};

/// Writes text to <out>/<name> when --out was given, else to stdout.
void deliver(const Flags& f, const sn::ExperimentConfig& cfg, const std::string& name, const std::string& text)
{
    if (f.out_opt->count() == 0 && !cfg.preset) {
        std::cout << text;
        return;
    }
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
        throw sn::Error(sn::ErrorCode::IoFailure, "cannot create '" + cfg.out_dir.string() + "'");
    const auto path = cfg.out_dir / name;
    sn::io::CsvWriter::write_file(path, text);
    std::cout << path.generic_string() << '\n';
}

std::string join(const std::vector<sn::Lag>& v)
{
    std::string s;
    for (auto l : v)
        s += (s.empty() ? "" : " ") + std::to_string(l);
    return s;
}

int fail(std::string_view code, const std::string& message)
{
    nlohmann::json j = {{"error", code}, {"message", message}};
    std::cerr << j.dump() << std::endl;
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Super-Nyquist co-prime sampling: difference sets, bias windows and correlogram spectra"};
    app.require_subcommand(1);

    Flags diffset_f, weight_f, bias_f, spectrum_f, preset_f, run_f;
    auto* diffset_cmd = app.add_subcommand("diffset", "self/cross difference sets and claim checks");
    diffset_f.attach(diffset_cmd);
    auto* weight_cmd = app.add_subcommand("weight", "weight function z(l) as lag,weight CSV");
    weight_f.attach(weight_cmd);
    weight_cmd->add_flag("--closed", weight_f.closed, "use the super-Nyquist closed form");
    auto* bias_cmd = app.add_subcommand("bias", "bias window as omega_over_pi,window_value CSV");
    bias_f.attach(bias_cmd);
    bias_cmd->add_flag("--closed", bias_f.closed, "use the super-Nyquist closed form");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "correlogram PSD estimate and peaks");
    spectrum_f.attach(spectrum_cmd);
    auto* run_cmd = app.add_subcommand("run", "run a full experiment (or preset) from flags/config");
    run_f.attach(run_cmd);

    std::string preset_name;
    auto* preset_cmd = app.add_subcommand("preset", "reproduce a figure/table preset");
    preset_f.attach(preset_cmd);
    preset_cmd->add_option("name", preset_name, "fig3 | fig4 | fig5 | fig6 | fig7 | fig8 | fig10 | table1")
        ->required();

    double hz = 0.0;
    double fs = 0.0;
    std::string map_scheme = "super-nyquist";
    auto* map_cmd = app.add_subcommand("map-freq", "normalize a physical frequency to a scheme's grid");
    map_cmd->add_option("--hz", hz, "frequency in Hz")->required();
    map_cmd->add_option("--fs", fs, "Nyquist sampling rate f_s in Hz")->required();
    map_cmd->add_option("--scheme", map_scheme, "prototype | super-nyquist");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("InvalidArguments", e.what());
    }

    try {
        if (*diffset_cmd) {
            const auto cfg = diffset_f.resolve();
            const auto scheme = cfg.scheme();
            const auto d = sn::difference_sets(scheme);
            const auto rep = sn::verify_claims(scheme);
            if (diffset_f.out_opt->count()) {
                deliver(diffset_f, cfg, sn::scheme_tag(scheme) + "_claims.csv",
                        sn::claims_csv({{scheme, rep}}, sn::to_json(cfg), cfg.signal.seed));
            } else {
                std::cout << "# lags in units of d/" << scheme.grid_denominator << "\n"
                          << "self_m: " << join(d.self_m) << "\n"
                          << "self_n: " << join(d.self_n) << "\n"
                          << "cross_pos: " << join(d.cross_pos) << "\n"
                          << "cross_neg: " << join(d.cross_neg) << "\n";
                std::cout << sn::claims_csv({{scheme, rep}}, sn::to_json(cfg), cfg.signal.seed);
            }
        } else if (*weight_cmd) {
            const auto cfg = weight_f.resolve();
            const auto scheme = cfg.scheme();
            const auto z = weight_f.closed ? sn::weight_closed(scheme) : sn::weight_enumerated(scheme);
            deliver(weight_f, cfg, sn::scheme_tag(scheme) + "_weight.csv",
                    sn::weight_csv(z, sn::to_json(cfg), cfg.signal.seed));
        } else if (*bias_cmd) {
            const auto cfg = bias_f.resolve();
            const auto scheme = cfg.scheme();
            const int g = cfg.grid.value_or(sn::kDefaultBiasGrid);
            const auto b = bias_f.closed ? sn::bias_closed(scheme, g) : sn::bias_from_weights(sn::weight_enumerated(scheme), g);
            deliver(bias_f, cfg, sn::scheme_tag(scheme) + "_bias.csv",
                    sn::bias_csv(b, sn::to_json(cfg), cfg.signal.seed));
        } else if (*spectrum_cmd) {
            const auto cfg = spectrum_f.resolve();
            const auto scheme = cfg.scheme();
            const auto est = sn::correlogram_psd(scheme, cfg.signal, cfg.snapshots,
                                                 cfg.grid.value_or(sn::kDefaultSpectrumGrid));
            const auto peaks = sn::find_peaks(est, std::max<std::size_t>(1, cfg.signal.tones.size() + 2));
            const auto j = sn::to_json(cfg);
            deliver(spectrum_f, cfg, sn::scheme_tag(scheme) + "_psd.csv", sn::spectrum_csv(est, j, cfg.signal.seed));
            deliver(spectrum_f, cfg, sn::scheme_tag(scheme) + "_peaks.csv", sn::peaks_csv(peaks, j, cfg.signal.seed));
        } else if (*preset_cmd) {
            if (preset_f.any_override() || preset_f.config_opt->count())
                throw sn::Error(sn::ErrorCode::InvalidConfig,
                                "preset '" + preset_name + "' fixes all parameters; only --out is accepted");
            const std::filesystem::path dir = preset_f.out_opt->count() ? preset_f.out : ".";
            for (const auto& p : sn::run_preset(preset_name, dir))
                std::cout << p.generic_string() << '\n';
        } else if (*run_cmd) {
            for (const auto& p : sn::run_experiment(run_f.resolve()))
                std::cout << p.generic_string() << '\n';
        } else if (*map_cmd) {
            const auto nu = sn::map_frequency(hz, fs, sn::parse_scheme_kind(map_scheme));
            std::cout << (nu ? sn::io::format_number(*nu) : std::string("unrepresentable")) << '\n';
        }
    } catch (const sn::Error& e) {
        return fail(sn::to_string(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail("Internal", e.what());
    }
    return 0;
}
