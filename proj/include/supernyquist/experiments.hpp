#ifndef SUPERNYQUIST_EXPERIMENTS_HPP
#define SUPERNYQUIST_EXPERIMENTS_HPP

// Declarative experiments, figure presets and the frequency-normalization table.
//
// JSON config schema (all keys optional unless noted):
//
//   {
//     "preset":    "fig3" | "fig4" | "fig5" | "fig6" | "fig7" | "fig8" | "fig10" | "table1",
//     "scheme":    "prototype" | "super-nyquist" | "multi-level",
//     "m": 4, "n": 3,            // co-prime kinds
//     "levels": [2, 3, 5],       // multi-level
//     "periods": 1,
//     "tones": [{"nu": 0.1, "amplitude": 1.0}],   // nu on the scheme's own grid
//     "noise_std": 0.0,
//     "seed": 1,
//     "k": 10,                   // snapshots
//     "grid": 1024,              // frequency grid size (bias defaults to 4096)
//     "out": "results"
//   }
//
// A preset fixes every experimental parameter; combining it with any key other than
// "out" is rejected.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "supernyquist/bias.hpp"
#include "supernyquist/diffset.hpp"
#include "supernyquist/error.hpp"
#include "supernyquist/estimator.hpp"
#include "supernyquist/io.hpp"
#include "supernyquist/scheme.hpp"
#include "supernyquist/signal.hpp"

namespace supernyquist {

inline constexpr std::uint64_t kPresetSeed = 1;
inline constexpr double kPresetSamplingHz = 500.0;
inline constexpr int kPresetSnapshots = 10;

inline const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names = {"fig3", "fig4",  "fig5",  "fig6",
                                                    "fig7", "fig8", "fig10", "table1"};
    return names;
}

/// Normalized frequency nu = f / (q_grid f_s / 2); nullopt when nu > 1 (unrepresentable).
inline std::optional<double> map_frequency(double f_hz, double f_s, int grid_denominator)
{
    if (!(f_hz > 0.0) || !(f_s > 0.0))
        throw Error(ErrorCode::NonPositiveInput, "frequency and sampling rate must be positive");
    if (grid_denominator < 1)
        throw Error(ErrorCode::InvalidParameter, "grid denominator must be >= 1");
    const double nu = f_hz / (grid_denominator * f_s / 2.0);
    if (nu > 1.0)
        return std::nullopt;
    return nu;
}

inline std::optional<double> map_frequency(double f_hz, double f_s, SchemeKind kind)
{
    if (kind == SchemeKind::MultiLevel)
        throw Error(ErrorCode::InvalidParameter, "multi-level mapping depends on the level count");
    return map_frequency(f_hz, f_s, kind == SchemeKind::Prototype ? 1 : 2);
}

/// The tone a physical frequency produces on a scheme's grid, folded into the baseband
/// when it lies above the scheme's maximum frequency.
inline Tone physical_tone(double f_hz, double f_s, const SchemeConfig& config, double amplitude = 1.0)
{
    if (!(f_hz > 0.0) || !(f_s > 0.0))
        throw Error(ErrorCode::NonPositiveInput, "frequency and sampling rate must be positive");
    return {amplitude, alias_frequency(f_hz / (config.grid_denominator * f_s / 2.0))};
}

struct ExperimentConfig {
    SchemeKind kind = SchemeKind::SuperNyquist;
    int m = 4;
    int n = 3;
    std::vector<int> levels;
    int periods = 1;
    SignalSpec signal;
    int snapshots = kPresetSnapshots;
    std::optional<int> grid;
    std::filesystem::path out_dir = ".";
    std::optional<std::string> preset;

    SchemeConfig scheme() const
    {
        if (kind == SchemeKind::MultiLevel)
            return make_multilevel_scheme(levels, periods);
        return make_coprime_scheme(kind, m, n, periods);
    }
};

inline nlohmann::json scheme_json(const SchemeConfig& c)
{
    nlohmann::json j;
    j["scheme"] = std::string(to_string(c.kind));
    if (c.is_coprime_kind()) {
        j["m"] = c.m;
        j["n"] = c.n;
    } else {
        j["levels"] = c.levels;
    }
    j["periods"] = c.periods;
    j["grid_denominator"] = c.grid_denominator;
    return j;
}

inline nlohmann::json signal_json(const SignalSpec& s)
{
    nlohmann::json tones = nlohmann::json::array();
    for (const auto& t : s.tones)
        tones.push_back({{"nu", t.nu}, {"amplitude", t.amplitude}});
    return {{"tones", tones}, {"noise_std", s.noise_std}, {"seed", s.seed}};
}

inline nlohmann::json to_json(const ExperimentConfig& c)
{
    nlohmann::json j;
    if (c.preset)
        j["preset"] = *c.preset;
    j["scheme"] = std::string(to_string(c.kind));
    if (c.kind == SchemeKind::MultiLevel)
        j["levels"] = c.levels;
    else {
        j["m"] = c.m;
        j["n"] = c.n;
    }
    j["periods"] = c.periods;
    j.update(signal_json(c.signal));
    j["k"] = c.snapshots;
    if (c.grid)
        j["grid"] = *c.grid;
    j["out"] = c.out_dir.generic_string();
    return j;
}

/// Applies the keys present in j on top of cfg.
inline void apply_json(ExperimentConfig& cfg, const nlohmann::json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::InvalidConfig, "config must be a JSON object");
    static const std::vector<std::string> known = {"preset", "scheme", "m",    "n",    "levels", "periods",
                                                   "tones",  "noise_std", "seed", "k", "grid",   "out"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw Error(ErrorCode::InvalidConfig, "unknown config key '" + it.key() + "'");
    try {
        if (j.contains("preset")) {
            for (auto it = j.begin(); it != j.end(); ++it)
                if (it.key() != "preset" && it.key() != "out")
                    throw Error(ErrorCode::InvalidConfig,
                                "preset configs cannot override '" + it.key() + "'");
            cfg.preset = j.at("preset").get<std::string>();
        }
        if (j.contains("scheme"))
            cfg.kind = parse_scheme_kind(j.at("scheme").get<std::string>());
        if (j.contains("m"))
            cfg.m = j.at("m").get<int>();
        if (j.contains("n"))
            cfg.n = j.at("n").get<int>();
        if (j.contains("levels"))
            cfg.levels = j.at("levels").get<std::vector<int>>();
        if (j.contains("periods"))
            cfg.periods = j.at("periods").get<int>();
        if (j.contains("tones")) {
            cfg.signal.tones.clear();
            for (const auto& t : j.at("tones"))
                cfg.signal.tones.push_back({t.value("amplitude", 1.0), t.at("nu").get<double>()});
        }
        if (j.contains("noise_std"))
            cfg.signal.noise_std = j.at("noise_std").get<double>();
        if (j.contains("seed"))
            cfg.signal.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("k"))
            cfg.snapshots = j.at("k").get<int>();
        if (j.contains("grid"))
            cfg.grid = j.at("grid").get<int>();
        if (j.contains("out"))
            cfg.out_dir = j.at("out").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
}

inline ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorCode::IoFailure, "cannot read config '" + path.string() + "'");
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, e.what());
    }
    ExperimentConfig cfg;
    apply_json(cfg, j);
    return cfg;
}

// ---------------------------------------------------------------------------
// File emitters. Every file starts with comment lines holding the config and seed.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> header(std::string_view what, const nlohmann::json& config, std::uint64_t seed)
{
    return {"supernyquist " + std::string(what), "config: " + config.dump(), "seed: " + std::to_string(seed)};
}

} // namespace detail

struct Outputs {
    std::filesystem::path dir;
    std::vector<std::filesystem::path> files;

    std::filesystem::path emit(const std::string& name, const std::string& text)
    {
        const auto p = dir / name;
        io::CsvWriter::write_file(p, text);
        files.push_back(p);
        return p;
    }
};

inline std::string weight_csv(const LagTable& t, const nlohmann::json& cfg, std::uint64_t seed)
{
    io::CsvWriter w(detail::header("weight function (" + std::string(to_string(t.source)) + ")", cfg, seed));
    w.columns({"lag", "weight"});
    for (Lag l = -t.max_lag; l <= t.max_lag; ++l)
        w.row(l, t.z(l));
    return w.str();
}

inline std::string bias_csv(const BiasWindow& b, const nlohmann::json& cfg, std::uint64_t seed)
{
    io::CsvWriter w(detail::header("bias window, s = " + io::format_number(b.normalization), cfg, seed));
    w.columns({"omega_over_pi", "window_value"});
    for (std::size_t g = 0; g < b.omega.size(); ++g)
        w.row(b.omega[g] / std::numbers::pi, b.values[g]);
    return w.str();
}

inline std::string spectrum_csv(const SpectrumEstimate& s, const nlohmann::json& cfg, std::uint64_t seed)
{
    io::CsvWriter w(detail::header("correlogram PSD, K = " + std::to_string(s.snapshots), cfg, seed));
    w.columns({"omega_over_pi", "psd"});
    for (std::size_t g = 0; g < s.omega.size(); ++g)
        w.row(s.omega[g] / std::numbers::pi, s.psd[g]);
    return w.str();
}

inline std::string peaks_csv(const std::vector<Peak>& peaks, const nlohmann::json& cfg, std::uint64_t seed)
{
    io::CsvWriter w(detail::header("spectral peaks", cfg, seed));
    w.columns({"rank", "bin", "omega_over_pi", "power"});
    for (std::size_t i = 0; i < peaks.size(); ++i)
        w.row(i + 1, peaks[i].bin, peaks[i].omega_over_pi, peaks[i].power);
    return w.str();
}

inline std::string claims_csv(const std::vector<std::pair<SchemeConfig, ClaimReport>>& reports,
                              const nlohmann::json& cfg, std::uint64_t seed)
{
    io::CsvWriter w(detail::header("difference-set claims", cfg, seed));
    w.columns({"scheme", "m", "n", "cross_disjoint", "distinct_cross", "prototype_two_contributors",
               "paired_cross_count", "paired_cross_lags"});
    for (const auto& [c, r] : reports) {
        std::string pairs;
        for (const auto& [a, b] : r.paired_cross_values)
            pairs += (pairs.empty() ? "" : " ") + std::to_string(a) + "/" + std::to_string(b);
        const std::string two = r.prototype_two_contributors ? (*r.prototype_two_contributors ? "true" : "false")
                                                             : "n/a";
        w.row(std::string(to_string(c.kind)), c.m, c.n, std::string(r.cross_disjoint ? "true" : "false"),
              r.distinct_cross_count, two, r.paired_cross_values.size(), pairs);
    }
    return w.str();
}

inline std::string table1_csv(const std::vector<double>& hertz, double f_s)
{
    io::CsvWriter w(detail::header("frequency normalization table",
                                   {{"preset", "table1"}, {"f_s", f_s}}, kPresetSeed));
    w.columns({"hertz", "super_nyquist", "prototype"});
    auto cell = [&](double f, SchemeKind k) {
        const auto nu = map_frequency(f, f_s, k);
        return nu ? io::format_number(*nu) : std::string("-");
    };
    for (double f : hertz)
        w.row(f, cell(f, SchemeKind::SuperNyquist), cell(f, SchemeKind::Prototype));
    return w.str();
}

inline std::string scheme_tag(const SchemeConfig& c)
{
    std::string tag;
    switch (c.kind) {
    case SchemeKind::Prototype: tag = "proto"; break;
    case SchemeKind::SuperNyquist: tag = "sn"; break;
    case SchemeKind::MultiLevel:
        tag = "ml";
        for (int v : c.levels)
            tag += "_" + std::to_string(v);
        break;
    }
    if (c.is_coprime_kind())
        tag += "_m" + std::to_string(c.m) + "_n" + std::to_string(c.n);
    if (c.periods != 1)
        tag += "_r" + std::to_string(c.periods);
    return tag;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

namespace detail {

inline const std::vector<std::pair<int, int>>& figure_pairs()
{
    static const std::vector<std::pair<int, int>> pairs = {{4, 3}, {3, 4}, {5, 3}, {3, 5}};
    return pairs;
}

inline void spectrum_run(Outputs& out, const std::string& preset, const SchemeConfig& scheme,
                         const std::vector<double>& hertz, int snapshots, std::vector<io::Series>& plot)
{
    SignalSpec sig;
    sig.seed = kPresetSeed;
    for (double f : hertz)
        sig.tones.push_back(physical_tone(f, kPresetSamplingHz, scheme));
    nlohmann::json cfg = scheme_json(scheme);
    cfg["preset"] = preset;
    cfg["f_s"] = kPresetSamplingHz;
    cfg["tones_hz"] = hertz;
    cfg["k"] = snapshots;
    cfg["grid"] = kDefaultSpectrumGrid;
    cfg.update(signal_json(sig));

    const SpectrumEstimate est = correlogram_psd(scheme, sig, snapshots, kDefaultSpectrumGrid);
    const std::string stem = preset + "_" + scheme_tag(scheme) + "_k" + std::to_string(snapshots);
    out.emit(stem + "_psd.csv", spectrum_csv(est, cfg, sig.seed));
    out.emit(stem + "_peaks.csv", peaks_csv(find_peaks(est, hertz.size() + 2), cfg, sig.seed));

    io::Series s{scheme_tag(scheme) + " K=" + std::to_string(snapshots), {}, est.psd};
    for (double w : est.omega)
        s.x.push_back(w / std::numbers::pi);
    plot.push_back(std::move(s));
}

inline void bias_series(std::vector<io::Series>& plot, const std::string& name, const BiasWindow& b)
{
    io::Series s{name, {}, b.values};
    for (double w : b.omega)
        s.x.push_back(w / std::numbers::pi);
    plot.push_back(std::move(s));
}

inline void spectrum_preset(Outputs& out, const std::string& name, const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<double>& hertz, const std::vector<int>& snapshot_counts)
{
    for (const auto& [m, n] : pairs) {
        std::vector<io::Series> plot;
        for (SchemeKind kind : {SchemeKind::SuperNyquist, SchemeKind::Prototype})
            for (int k : snapshot_counts)
                spectrum_run(out, name, make_coprime_scheme(kind, m, n), hertz, k, plot);
        out.emit(name + "_m" + std::to_string(m) + "_n" + std::to_string(n) + ".svg",
                 io::line_plot_svg(name + " correlogram PSD, (M, N) = (" + std::to_string(m) + ", " +
                                       std::to_string(n) + ")",
                                   plot));
    }
}

} // namespace detail

inline std::vector<std::filesystem::path> run_preset(const std::string& name, const std::filesystem::path& dir)
{
    if (std::find(preset_names().begin(), preset_names().end(), name) == preset_names().end())
        throw Error(ErrorCode::InvalidConfig, "unknown preset '" + name + "'");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorCode::IoFailure, "cannot create '" + dir.string() + "': " + ec.message());
    Outputs out{dir, {}};
    const auto seed = kPresetSeed;

    if (name == "fig3" || name == "fig4") {
        const SchemeKind kind = name == "fig3" ? SchemeKind::Prototype : SchemeKind::SuperNyquist;
        std::vector<io::Series> plot;
        std::vector<std::pair<SchemeConfig, ClaimReport>> claims;
        for (const auto& [m, n] : detail::figure_pairs()) {
            const SchemeConfig c = make_coprime_scheme(kind, m, n);
            nlohmann::json cfg = scheme_json(c);
            cfg["preset"] = name;
            out.emit(name + "_" + scheme_tag(c) + "_weight.csv", weight_csv(weight_enumerated(c), cfg, seed));
            claims.emplace_back(c, verify_claims(c));
            if (name == "fig4") {
                for (SchemeKind bk : {SchemeKind::SuperNyquist, SchemeKind::Prototype}) {
                    const SchemeConfig bc = make_coprime_scheme(bk, m, n);
                    nlohmann::json bcfg = scheme_json(bc);
                    bcfg["preset"] = name;
                    bcfg["grid"] = kDefaultBiasGrid;
                    const BiasWindow b = bk == SchemeKind::SuperNyquist ? bias_closed(bc)
                                                                        : bias_from_weights(weight_enumerated(bc));
                    out.emit(name + "_" + scheme_tag(bc) + "_bias.csv", bias_csv(b, bcfg, seed));
                    detail::bias_series(plot, scheme_tag(bc), b);
                }
            }
        }
        out.emit(name + "_claims.csv", claims_csv(claims, {{"preset", name}}, seed));
        if (!plot.empty())
            out.emit(name + "_bias.svg", io::line_plot_svg("normalized bias windows", plot));
    } else if (name == "fig5") {
        detail::spectrum_preset(out, name, {{4, 3}}, {50, 150}, {2, 4, 10});
    } else if (name == "fig6") {
        detail::spectrum_preset(out, name, {{4, 3}}, {50, 150, 300}, {kPresetSnapshots});
    } else if (name == "fig7") {
        detail::spectrum_preset(out, name, {{3, 4}, {3, 5}, {5, 3}}, {50, 150, 300}, {kPresetSnapshots});
    } else if (name == "fig8") {
        detail::spectrum_preset(out, name, {{4, 3}}, {50, 150, 300, 450}, {kPresetSnapshots});
    } else if (name == "fig10") {
        std::vector<io::Series> plot;
        for (int r = 1; r <= 4; ++r) {
            const SchemeConfig c = make_coprime_scheme(SchemeKind::SuperNyquist, 4, 3, r);
            nlohmann::json cfg = scheme_json(c);
            cfg["preset"] = name;
            cfg["grid"] = kDefaultBiasGrid;
            const BiasWindow b = bias_closed(c);
            out.emit(name + "_sn_m4_n3_r" + std::to_string(r) + "_bias.csv", bias_csv(b, cfg, seed));
            detail::bias_series(plot, "r=" + std::to_string(r), b);
        }
        out.emit(name + "_bias.svg", io::line_plot_svg("super-Nyquist (4, 3) bias, r = 1..4", plot));
    } else if (name == "table1") {
        out.emit("table1.csv", table1_csv({50, 150, 250, 300, 450, 500}, kPresetSamplingHz));
    }
    return out.files;
}

/// Runs a preset, or a single custom experiment emitting weights, bias, PSD, peaks and
/// (for co-prime kinds) the claim report.
inline std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& config)
{
    if (config.preset)
        return run_preset(*config.preset, config.out_dir);

    const SchemeConfig scheme = config.scheme();
    if (config.snapshots < 1)
        throw Error(ErrorCode::InvalidConfig, "k must be >= 1");
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec)
        throw Error(ErrorCode::IoFailure, "cannot create '" + config.out_dir.string() + "': " + ec.message());

    Outputs out{config.out_dir, {}};
    const nlohmann::json cfg = to_json(config);
    const auto seed = config.signal.seed;
    const std::string tag = scheme_tag(scheme);

    const LagTable z = weight_enumerated(scheme);
    out.emit(tag + "_weight.csv", weight_csv(z, cfg, seed));
    const BiasWindow b = bias_from_weights(z, config.grid.value_or(kDefaultBiasGrid));
    out.emit(tag + "_bias.csv", bias_csv(b, cfg, seed));
    if (scheme.is_coprime_kind())
        out.emit(tag + "_claims.csv", claims_csv({{scheme, verify_claims(scheme)}}, cfg, seed));

    const SpectrumEstimate est =
        correlogram_psd(scheme, config.signal, config.snapshots, config.grid.value_or(kDefaultSpectrumGrid));
    out.emit(tag + "_psd.csv", spectrum_csv(est, cfg, seed));
    out.emit(tag + "_peaks.csv",
             peaks_csv(find_peaks(est, std::max<std::size_t>(1, config.signal.tones.size() + 2)), cfg, seed));
    return out.files;
}

} // namespace supernyquist

#endif
