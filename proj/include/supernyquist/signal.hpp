#ifndef SUPERNYQUIST_SIGNAL_HPP
#define SUPERNYQUIST_SIGNAL_HPP

// Seeded multi-tone test signals evaluated on virtual-grid instants.
//
// Frequencies are normalized to the scheme's own virtual rate: nu = 1 corresponds to
// w = pi rad/tick, i.e. half of q_grid * f_s. A tone therefore evaluates as
// A cos(pi nu t + phi) at integer tick t.
//
// Random streams use std::mt19937_64, whose output sequence is fixed by the C++
// standard. Uniform and Gaussian variates are derived from raw 64-bit words here
// rather than through <random> distributions, whose algorithms are implementation
// defined; this keeps streams identical across toolchains.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "supernyquist/error.hpp"
#include "supernyquist/grid.hpp"
#include "supernyquist/scheme.hpp"
#include "supernyquist/spectrum.hpp"

namespace supernyquist {

struct Tone {
    double amplitude = 1.0;
    double nu = 0.0;
};

struct SignalSpec {
    std::vector<Tone> tones;
    double noise_std = 0.0;
    std::uint64_t seed = 0;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(th);
        has_spare_ = true;
        return r * std::cos(th);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// splitmix64 finalizer; derives independent sub-seeds from (seed, index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline void validate(const SignalSpec& spec)
{
    for (const auto& t : spec.tones) {
        if (!(t.nu > 0.0 && t.nu < 1.0))
            throw Error(ErrorCode::FrequencyOutOfRange,
                        "normalized frequency " + std::to_string(t.nu) + " is outside (0, 1)");
        if (!(t.amplitude > 0.0))
            throw Error(ErrorCode::InvalidParameter, "tone amplitude must be positive");
    }
    if (!(spec.noise_std >= 0.0))
        throw Error(ErrorCode::InvalidParameter, "noise standard deviation must be non-negative");
}

/// One phase per tone in [0, 2pi), drawn from the master stream before any noise.
inline std::vector<double> tone_phases(const SignalSpec& spec)
{
    Rng rng(spec.seed);
    std::vector<double> ph;
    ph.reserve(spec.tones.size());
    for (std::size_t i = 0; i < spec.tones.size(); ++i)
        ph.push_back(2.0 * std::numbers::pi * rng.uniform());
    return ph;
}

/// Noise-free tone sum at each combined instant with the given per-tone phases.
inline std::vector<double> synthesize_tones(std::span<const Tone> tones, std::span<const double> phases,
                                            const InstantSet& instants)
{
    if (phases.size() != tones.size())
        throw Error(ErrorCode::LengthMismatch, "one phase per tone required");
    std::vector<double> x(instants.combined.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = static_cast<double>(instants.combined[i]);
        double v = 0.0;
        for (std::size_t p = 0; p < tones.size(); ++p)
            v += tones[p].amplitude * std::cos(std::numbers::pi * tones[p].nu * t + phases[p]);
        x[i] = v;
    }
    return x;
}

/// Samples aligned with instants.combined. Time is absolute (snapshot offset included),
/// so consecutive snapshots observe one continuous realization. Noise for snapshot k
/// comes from its own sub-stream.
inline std::vector<double> generate_samples(const SignalSpec& spec, const InstantSet& instants)
{
    validate(spec);
    std::vector<double> x = synthesize_tones(spec.tones, tone_phases(spec), instants);
    if (spec.noise_std > 0.0) {
        Rng noise(mix_seed(spec.seed, static_cast<std::uint64_t>(instants.snapshot_index)));
        for (double& v : x)
            v += spec.noise_std * noise.normal();
    }
    return x;
}

/// Folds an arbitrary non-negative normalized frequency into [0, 1], the band a
/// real tone at nu appears in after sampling on an integer grid.
inline double alias_frequency(double nu)
{
    double f = std::fmod(std::abs(nu), 2.0);
    return f > 1.0 ? 2.0 - f : f;
}

/// Analytic line spectrum: power A^2/4 at the bin nearest each tone (one side of a
/// real cosine), zero elsewhere. Ground truth for peak checks, not an estimator.
inline SpectrumEstimate reference_spectrum(const SignalSpec& spec, int grid_size = kDefaultSpectrumGrid)
{
    validate(spec);
    SpectrumEstimate out;
    out.omega = omega_grid(grid_size);
    out.psd.assign(out.omega.size(), 0.0);
    for (const auto& t : spec.tones)
        out.psd[static_cast<std::size_t>(nearest_bin(t.nu, grid_size))] += t.amplitude * t.amplitude / 4.0;
    return out;
}

} // namespace supernyquist

#endif
