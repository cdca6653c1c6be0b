#ifndef SUPERNYQUIST_BIAS_HPP
#define SUPERNYQUIST_BIAS_HPP

// Correlogram bias window W(e^{jw}), the Fourier transform of z(l) scaled by 1/s.
//
// Three routes are provided and must agree:
//   bias_closed        -- closed-form sum of two Dirichlet-squared terms plus a cross term
//   bias_from_weights  -- (1/s) sum_l z(l) cos(w l) over any LagTable
//   bias_factorized    -- |sum_t exp(j w t)|^2 / s over the instant pattern

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "supernyquist/diffset.hpp"
#include "supernyquist/error.hpp"
#include "supernyquist/grid.hpp"
#include "supernyquist/scheme.hpp"

namespace supernyquist {

struct BiasWindow {
    std::vector<double> omega;  // radians per virtual-grid tick, [0, pi]
    std::vector<double> values;
    double normalization = 1.0; // s
    SchemeConfig config;
};

/// Default normalization s = total ordered pairs = (samples per snapshot)^2, giving W(0) = 1.
inline double default_normalization(const SchemeConfig& config)
{
    const auto n = static_cast<double>(config.samples_per_snapshot());
    return n * n;
}

/// |A(w)|^2 with A(w) = sum_t exp(j w t).
inline double pattern_power(std::span<const Tick> instants, double omega)
{
    double re = 0.0;
    double im = 0.0;
    for (Tick t : instants) {
        const double ph = omega * static_cast<double>(t);
        re += std::cos(ph);
        im += std::sin(ph);
    }
    return re * re + im * im;
}

namespace detail {

// Below this |sin|, the closed form is replaced by the factorization at that point.
inline constexpr double kSingularSin = 1e-6;

inline double resolve_normalization(double s, const SchemeConfig& config)
{
    if (s == 0.0)
        return default_normalization(config);
    if (!(s > 0.0))
        throw Error(ErrorCode::InvalidParameter, "normalization must be positive");
    return s;
}

} // namespace detail

/// Closed-form super-Nyquist bias window at a single frequency.
inline double bias_closed_at(const SchemeConfig& config, double omega, double s = 0.0)
{
    if (config.kind != SchemeKind::SuperNyquist)
        throw Error(ErrorCode::UnsupportedScheme,
                    std::string("no closed-form bias window for ") + std::string(to_string(config.kind)) +
                        " schemes; use bias_from_weights");
    s = detail::resolve_normalization(s, config);
    const double m = config.m;
    const double n = config.n;
    const double sin_m = std::sin(omega * m);
    const double sin_n = std::sin(omega * n);
    if (std::abs(sin_m) < detail::kSingularSin || std::abs(sin_n) < detail::kSingularSin) {
        const InstantSet inst = sample_instants(config, 0);
        return pattern_power(inst.combined, omega) / s;
    }
    const double sin_full = std::sin(omega * config.periods * m * n);
    const double a = sin_full / sin_m;
    const double b = sin_full / sin_n;
    const double cross = 2.0 * std::cos(omega * (m - n + 1.0)) * sin_full * sin_full / (sin_m * sin_n);
    return (a * a + b * b + cross) / s;
}

inline BiasWindow bias_closed(const SchemeConfig& config, int grid_size = kDefaultBiasGrid, double s = 0.0)
{
    BiasWindow w;
    w.config = config;
    w.normalization = detail::resolve_normalization(s, config);
    w.omega = omega_grid(grid_size);
    w.values.reserve(w.omega.size());
    for (double om : w.omega)
        w.values.push_back(bias_closed_at(config, om, w.normalization));
    return w;
}

/// Cosine transform of a symmetric weight table. s = 0 selects total_pairs.
inline BiasWindow bias_from_weights(const LagTable& lags, int grid_size = kDefaultBiasGrid, double s = 0.0)
{
    if (!lags.is_symmetric())
        throw Error(ErrorCode::AsymmetricLagTable, "weight table is not symmetric in lag");
    if (s == 0.0)
        s = static_cast<double>(lags.total_pairs);
    if (!(s > 0.0))
        throw Error(ErrorCode::InvalidParameter, "normalization must be positive");

    BiasWindow w;
    w.config = lags.config;
    w.normalization = s;
    w.omega = omega_grid(grid_size);
    w.values.resize(w.omega.size());

    const std::int64_t z0 = lags.z(0);
    std::vector<std::pair<double, double>> positive; // (lag, weight) for l > 0
    lags.weights.for_each_nonzero([&](Lag l, std::int64_t v) {
        if (l > 0)
            positive.emplace_back(static_cast<double>(l), static_cast<double>(v));
    });
    for (std::size_t g = 0; g < w.omega.size(); ++g) {
        double acc = static_cast<double>(z0);
        for (const auto& [l, v] : positive)
            acc += 2.0 * v * std::cos(w.omega[g] * l);
        w.values[g] = acc / s;
    }
    return w;
}

/// |A(w)|^2 / s over the snapshot-0 instant pattern of a scheme.
inline BiasWindow bias_factorized(const SchemeConfig& config, int grid_size = kDefaultBiasGrid, double s = 0.0)
{
    BiasWindow w;
    w.config = config;
    w.normalization = detail::resolve_normalization(s, config);
    w.omega = omega_grid(grid_size);
    const InstantSet inst = sample_instants(config, 0);
    w.values.reserve(w.omega.size());
    for (double om : w.omega)
        w.values.push_back(pattern_power(inst.combined, om) / w.normalization);
    return w;
}

/// First-null main-lobe width 2*w0/pi, where w0 is the first local minimum above w = 0.
inline double main_lobe_width(const BiasWindow& window)
{
    const auto& v = window.values;
    for (std::size_t g = 1; g + 1 < v.size(); ++g)
        if (v[g] <= v[g - 1] && v[g] < v[g + 1])
            return 2.0 * window.omega[g] / std::numbers::pi;
    throw Error(ErrorCode::NoMinimumFound, "bias window has no local minimum on (0, pi)");
}

} // namespace supernyquist

#endif
