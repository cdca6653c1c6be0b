#ifndef SUPERNYQUIST_ESTIMATOR_HPP
#define SUPERNYQUIST_ESTIMATOR_HPP

// Coarray correlogram.
//
// Each snapshot contributes lag products x_i x_j over all ordered pairs of its
// combined instants. The PSD estimate
//
//     P(w) = 1/(K s) * sum_k | sum_i x_{k,i} exp(-j w t_{k,i}) |^2
//
// is non-negative by construction, and equals the cosine transform of the
// accumulated lag sums divided by K s. For x == 1 it reduces to the bias window.

#include <cmath>
#include <map>
#include <span>
#include <vector>

#include "supernyquist/bias.hpp"
#include "supernyquist/diffset.hpp"
#include "supernyquist/error.hpp"
#include "supernyquist/grid.hpp"
#include "supernyquist/scheme.hpp"
#include "supernyquist/signal.hpp"
#include "supernyquist/spectrum.hpp"

namespace supernyquist {

struct LagAccumulator {
    LagSeries<double> sums;
    int snapshots_seen = 0;

    LagAccumulator() = default;
    explicit LagAccumulator(Lag bound) : sums(bound) {}

    /// Sized for the within-snapshot lag range of a scheme.
    static LagAccumulator for_scheme(const SchemeConfig& config)
    {
        const InstantSet inst = sample_instants(config, 0);
        return LagAccumulator(inst.combined.empty() ? 0 : inst.combined.back() - inst.combined.front());
    }
};

/// Adds x_i x_j at lag t_i - t_j for every ordered pair. Each unordered product is
/// computed once and deposited at +l and -l, so the sums stay exactly symmetric.
inline void accumulate_snapshot(LagAccumulator& acc, const InstantSet& instants, std::span<const double> samples)
{
    const auto& t = instants.combined;
    if (samples.size() != t.size())
        throw Error(ErrorCode::LengthMismatch, "got " + std::to_string(samples.size()) + " samples for " +
                                                   std::to_string(t.size()) + " instants");
    for (std::size_t i = 0; i < t.size(); ++i) {
        acc.sums.add(0, samples[i] * samples[i]);
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            const double p = samples[i] * samples[j];
            acc.sums.add(t[i] - t[j], p);
            acc.sums.add(t[j] - t[i], p);
        }
    }
    ++acc.snapshots_seen;
}

/// r(l) = sums(l) / (K z(l)) at every lag the scheme covers; holes are omitted.
inline std::map<Lag, double> autocorrelation_estimate(const LagAccumulator& acc, const LagTable& lags)
{
    if (acc.snapshots_seen < 1)
        throw Error(ErrorCode::InvalidParameter, "no snapshots accumulated");
    std::map<Lag, double> r;
    const double k = acc.snapshots_seen;
    lags.weights.for_each_nonzero(
        [&](Lag l, std::int64_t z) { r.emplace(l, acc.sums[l] / (k * static_cast<double>(z))); });
    return r;
}

/// Cosine transform of accumulated lag sums.
inline SpectrumEstimate psd_from_lag_sums(const LagAccumulator& acc, const SchemeConfig& config,
                                          int grid_size = kDefaultSpectrumGrid, double s = 0.0)
{
    if (acc.snapshots_seen < 1)
        throw Error(ErrorCode::InvalidParameter, "no snapshots accumulated");
    SpectrumEstimate out;
    out.config = config;
    out.snapshots = acc.snapshots_seen;
    out.normalization = s == 0.0 ? default_normalization(config) : s;
    out.omega = omega_grid(grid_size);
    out.psd.resize(out.omega.size());
    std::vector<std::pair<double, double>> positive;
    acc.sums.for_each_nonzero([&](Lag l, double v) {
        if (l > 0)
            positive.emplace_back(static_cast<double>(l), v);
    });
    const double scale = 1.0 / (out.snapshots * out.normalization);
    for (std::size_t g = 0; g < out.omega.size(); ++g) {
        double v = acc.sums[0];
        for (const auto& [l, sum] : positive)
            v += 2.0 * sum * std::cos(out.omega[g] * l);
        out.psd[g] = v * scale;
    }
    return out;
}

/// Adds |sum_i x_i exp(-j w (t_i - t_start))|^2 at every w to psd (unnormalized).
inline void add_snapshot_power(std::span<double> psd, std::span<const double> omega, const InstantSet& instants,
                               std::span<const double> samples)
{
    if (samples.size() != instants.combined.size())
        throw Error(ErrorCode::LengthMismatch, "samples do not match instants");
    if (psd.size() != omega.size())
        throw Error(ErrorCode::LengthMismatch, "psd and frequency grid differ in size");
    const Tick start = instants.snapshot_start();
    for (std::size_t g = 0; g < omega.size(); ++g) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const double ph = omega[g] * static_cast<double>(instants.combined[i] - start);
            re += samples[i] * std::cos(ph);
            im -= samples[i] * std::sin(ph);
        }
        psd[g] += re * re + im * im;
    }
}

enum class PsdPath { Direct, LagSums };

inline SpectrumEstimate correlogram_psd(const SchemeConfig& config, const SignalSpec& spec, int snapshots,
                                        int grid_size = kDefaultSpectrumGrid, PsdPath path = PsdPath::Direct)
{
    if (snapshots < 1)
        throw Error(ErrorCode::InvalidParameter, "snapshot count K must be >= 1");
    validate(spec);

    if (path == PsdPath::LagSums) {
        LagAccumulator acc = LagAccumulator::for_scheme(config);
        for (int k = 0; k < snapshots; ++k) {
            const InstantSet inst = sample_instants(config, k);
            const auto x = generate_samples(spec, inst);
            accumulate_snapshot(acc, inst, x);
        }
        return psd_from_lag_sums(acc, config, grid_size);
    }

    SpectrumEstimate out;
    out.config = config;
    out.snapshots = snapshots;
    out.normalization = default_normalization(config);
    out.omega = omega_grid(grid_size);
    out.psd.assign(out.omega.size(), 0.0);
    for (int k = 0; k < snapshots; ++k) {
        const InstantSet inst = sample_instants(config, k);
        add_snapshot_power(out.psd, out.omega, inst, generate_samples(spec, inst));
    }
    const double scale = 1.0 / (snapshots * out.normalization);
    for (double& v : out.psd)
        v *= scale;
    return out;
}

} // namespace supernyquist

#endif
