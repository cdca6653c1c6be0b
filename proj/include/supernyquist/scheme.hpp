#ifndef SUPERNYQUIST_SCHEME_HPP
#define SUPERNYQUIST_SCHEME_HPP

// Sampling-scheme descriptors and sampling-instant generation.
//
// Every instant lives on an integer virtual grid of step d/q_grid, where d is the
// Nyquist period and q_grid is 1 (prototype), 2 (super-Nyquist) or the number of
// levels (multi-level). Nothing downstream ever sees a floating-point time.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supernyquist/error.hpp"

namespace supernyquist {

using Tick = std::int64_t;

enum class SchemeKind { Prototype, SuperNyquist, MultiLevel };

inline constexpr std::string_view to_string(SchemeKind kind) noexcept
{
    switch (kind) {
    case SchemeKind::Prototype: return "prototype";
    case SchemeKind::SuperNyquist: return "super-nyquist";
    case SchemeKind::MultiLevel: return "multi-level";
    }
    return "unknown";
}

inline SchemeKind parse_scheme_kind(std::string_view name)
{
    if (name == "prototype" || name == "proto")
        return SchemeKind::Prototype;
    if (name == "super-nyquist" || name == "supernyquist" || name == "sn")
        return SchemeKind::SuperNyquist;
    if (name == "multi-level" || name == "multilevel" || name == "ml")
        return SchemeKind::MultiLevel;
    throw Error(ErrorCode::InvalidParameter, "unknown scheme kind '" + std::string(name) + "'");
}

/// One uniform sub-sampler: instants offset + spacing*n for n in [0, count).
struct SubSampler {
    Tick spacing = 0;
    Tick offset = 0;
    Tick count = 0;
};

struct SchemeConfig {
    SchemeKind kind = SchemeKind::SuperNyquist;
    int m = 0;               // co-prime kinds only
    int n = 0;               // co-prime kinds only
    std::vector<int> levels; // MultiLevel only, in sub-sampler order
    int periods = 1;
    int grid_denominator = 2;

    bool is_coprime_kind() const noexcept { return kind != SchemeKind::MultiLevel; }

    /// P = product of all levels (MultiLevel) or M*N (co-prime kinds).
    Tick period_product() const
    {
        if (is_coprime_kind())
            return Tick{m} * Tick{n};
        return std::accumulate(levels.begin(), levels.end(), Tick{1},
                               [](Tick acc, int v) { return acc * v; });
    }

    /// Inter-element spacing M_i = prod_{k != i} N_k of multi-level sub-sampler i, in units of d.
    Tick level_spacing(std::size_t i) const { return period_product() / levels.at(i); }

    std::vector<SubSampler> sub_samplers() const
    {
        const Tick r = periods;
        switch (kind) {
        case SchemeKind::Prototype:
            return {{Tick{m}, 0, r * n}, {Tick{n}, 0, r * m}};
        case SchemeKind::SuperNyquist:
            return {{2 * Tick{m}, 0, r * n}, {2 * Tick{n}, 1, r * m}};
        case SchemeKind::MultiLevel: {
            std::vector<SubSampler> out;
            const Tick q = grid_denominator;
            for (std::size_t i = 0; i < levels.size(); ++i)
                out.push_back({q * level_spacing(i), static_cast<Tick>(i), r * levels[i]});
            return out;
        }
        }
        return {};
    }

    /// Virtual-grid ticks covered by one snapshot (r periods).
    Tick snapshot_span() const { return Tick{periods} * period_product() * grid_denominator; }

    /// Number of samples acquired per snapshot: r(M+N) or r*sum(N_i).
    Tick samples_per_snapshot() const
    {
        Tick total = 0;
        for (const auto& s : sub_samplers())
            total += s.count;
        return total;
    }

    bool operator==(const SchemeConfig&) const = default;
};

namespace detail {

inline void require_positive(int value, std::string_view what)
{
    if (value < 1)
        throw Error(ErrorCode::InvalidParameter,
                    std::string(what) + " must be a positive integer, got " + std::to_string(value));
}

} // namespace detail

inline SchemeConfig make_coprime_scheme(SchemeKind kind, int m, int n, int periods = 1)
{
    if (kind == SchemeKind::MultiLevel)
        throw Error(ErrorCode::InvalidParameter, "multi-level schemes are built from a level list");
    detail::require_positive(m, "M");
    detail::require_positive(n, "N");
    if (periods < 1)
        throw Error(ErrorCode::InvalidPeriods, "periods must be >= 1, got " + std::to_string(periods));
    if (std::gcd(m, n) != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                               ") = " + std::to_string(std::gcd(m, n)));
    SchemeConfig c;
    c.kind = kind;
    c.m = m;
    c.n = n;
    c.periods = periods;
    c.grid_denominator = kind == SchemeKind::Prototype ? 1 : 2;
    return c;
}

inline SchemeConfig make_multilevel_scheme(std::span<const int> levels, int periods = 1)
{
    if (levels.size() < 2)
        throw Error(ErrorCode::TooFewLevels,
                    "multi-level scheme needs at least 2 levels, got " + std::to_string(levels.size()));
    for (int v : levels)
        detail::require_positive(v, "level");
    if (periods < 1)
        throw Error(ErrorCode::InvalidPeriods, "periods must be >= 1, got " + std::to_string(periods));
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j)
            if (std::gcd(levels[i], levels[j]) != 1)
                throw Error(ErrorCode::NotCoprime, "levels " + std::to_string(levels[i]) + " and " +
                                                       std::to_string(levels[j]) + " share a factor");
    Tick product = 1;
    for (int v : levels) {
        if (product > std::numeric_limits<std::int32_t>::max() / v)
            throw Error(ErrorCode::InvalidParameter, "level product overflows");
        product *= v;
    }
    SchemeConfig c;
    c.kind = SchemeKind::MultiLevel;
    c.levels.assign(levels.begin(), levels.end());
    c.periods = periods;
    c.grid_denominator = static_cast<int>(levels.size());
    return c;
}

/// Generic entry point: params is {M, N} for co-prime kinds, the level list for MultiLevel.
inline SchemeConfig make_scheme(SchemeKind kind, std::span<const int> params, int periods = 1)
{
    if (kind == SchemeKind::MultiLevel)
        return make_multilevel_scheme(params, periods);
    if (params.size() != 2)
        throw Error(ErrorCode::InvalidParameter, "co-prime schemes take exactly two parameters (M, N)");
    return make_coprime_scheme(kind, params[0], params[1], periods);
}

struct InstantSet {
    std::vector<std::vector<Tick>> per_sampler;
    std::vector<Tick> combined; // sorted multiset
    std::int64_t snapshot_index = 0;
    Tick snapshot_span = 0;
    SchemeConfig config;

    /// First tick of this snapshot; subtract to re-base instants to the snapshot start.
    Tick snapshot_start() const { return snapshot_index * snapshot_span; }
};

inline InstantSet sample_instants(const SchemeConfig& config, std::int64_t snapshot_index = 0)
{
    if (snapshot_index < 0)
        throw Error(ErrorCode::InvalidParameter, "snapshot index must be non-negative");
    InstantSet out;
    out.config = config;
    out.snapshot_index = snapshot_index;
    out.snapshot_span = config.snapshot_span();
    const Tick base = snapshot_index * out.snapshot_span;
    for (const auto& s : config.sub_samplers()) {
        auto& v = out.per_sampler.emplace_back();
        v.reserve(static_cast<std::size_t>(s.count));
        for (Tick i = 0; i < s.count; ++i)
            v.push_back(base + s.offset + s.spacing * i);
        out.combined.insert(out.combined.end(), v.begin(), v.end());
    }
    std::sort(out.combined.begin(), out.combined.end());
    return out;
}

} // namespace supernyquist

#endif
