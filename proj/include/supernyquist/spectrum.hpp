#ifndef SUPERNYQUIST_SPECTRUM_HPP
#define SUPERNYQUIST_SPECTRUM_HPP

#include <algorithm>
#include <numbers>
#include <optional>
#include <vector>

#include "supernyquist/scheme.hpp"

namespace supernyquist {

/// PSD values on a uniform [0, pi] grid of the scheme's virtual rate.
struct SpectrumEstimate {
    std::vector<double> omega;
    std::vector<double> psd;
    int snapshots = 0;
    std::optional<SchemeConfig> config; // empty for analytic references
    double normalization = 1.0;
};

struct Peak {
    double omega_over_pi = 0.0;
    double power = 0.0;
    std::size_t bin = 0;
};

/// Up to `count` strict interior local maxima, strongest first; equal powers keep
/// the lower frequency first.
inline std::vector<Peak> find_peaks(const SpectrumEstimate& spectrum, std::size_t count)
{
    const auto& p = spectrum.psd;
    std::vector<Peak> peaks;
    for (std::size_t g = 1; g + 1 < p.size(); ++g)
        if (p[g] > p[g - 1] && p[g] > p[g + 1])
            peaks.push_back({spectrum.omega[g] / std::numbers::pi, p[g], g});
    std::stable_sort(peaks.begin(), peaks.end(),
                     [](const Peak& a, const Peak& b) { return a.power > b.power; });
    if (peaks.size() > count)
        peaks.resize(count);
    return peaks;
}

} // namespace supernyquist

#endif
