#ifndef SUPERNYQUIST_DIFFSET_HPP
#define SUPERNYQUIST_DIFFSET_HPP

// Difference sets and weight functions.
//
// Lags are integers on the scheme's virtual grid. For the super-Nyquist scheme a
// real lag l_r (in units of d) is stored as 2*l_r, so cross lags are odd and self
// lags are even.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "supernyquist/error.hpp"
#include "supernyquist/scheme.hpp"

namespace supernyquist {

using Lag = std::int64_t;

/// Dense storage for a function of lag over the symmetric range [-bound, bound].
/// Reads outside the range return T{}.
template <typename T>
class LagSeries {
public:
    LagSeries() : data_(1) {}
    explicit LagSeries(Lag bound) : bound_(bound), data_(static_cast<std::size_t>(2 * bound + 1)) {}

    Lag bound() const noexcept { return bound_; }

    T operator[](Lag l) const noexcept
    {
        return (l < -bound_ || l > bound_) ? T{} : data_[static_cast<std::size_t>(l + bound_)];
    }

    void add(Lag l, T value)
    {
        if (l < -bound_ || l > bound_)
            throw Error(ErrorCode::InvalidParameter,
                        "lag " + std::to_string(l) + " outside [-" + std::to_string(bound_) + ", " +
                            std::to_string(bound_) + "]");
        data_[static_cast<std::size_t>(l + bound_)] += value;
    }

    template <typename F>
    void for_each_nonzero(F&& f) const
    {
        for (Lag l = -bound_; l <= bound_; ++l) {
            const T& v = data_[static_cast<std::size_t>(l + bound_)];
            if (v != T{})
                f(l, v);
        }
    }

    /// Largest |l| with a non-zero value (0 if the series is empty).
    Lag extent() const noexcept
    {
        for (Lag l = bound_; l > 0; --l)
            if ((*this)[l] != T{} || (*this)[-l] != T{})
                return l;
        return 0;
    }

    LagSeries trimmed() const
    {
        const Lag e = extent();
        LagSeries out(e);
        for (Lag l = -e; l <= e; ++l)
            out.data_[static_cast<std::size_t>(l + e)] = (*this)[l];
        return out;
    }

    /// Value equality over the union of both ranges; bounds themselves do not matter.
    friend bool operator==(const LagSeries& a, const LagSeries& b)
    {
        const Lag e = std::max(a.bound_, b.bound_);
        for (Lag l = -e; l <= e; ++l)
            if (a[l] != b[l])
                return false;
        return true;
    }

private:
    Lag bound_ = 0;
    std::vector<T> data_;
};

enum class WeightSource { Enumerated, ClosedForm };

inline constexpr std::string_view to_string(WeightSource s) noexcept
{
    return s == WeightSource::Enumerated ? "enumerated" : "closed-form";
}

/// Weight function z(l): number of ordered sample pairs at each lag.
struct LagTable {
    LagSeries<std::int64_t> weights;
    Lag max_lag = 0;
    std::int64_t total_pairs = 0;
    SchemeConfig config;
    WeightSource source = WeightSource::Enumerated;

    std::int64_t z(Lag l) const noexcept { return weights[l]; }

    std::vector<Lag> support() const
    {
        std::vector<Lag> out;
        weights.for_each_nonzero([&](Lag l, std::int64_t) { out.push_back(l); });
        return out;
    }

    bool is_symmetric() const noexcept
    {
        for (Lag l = 1; l <= weights.bound(); ++l)
            if (weights[l] != weights[-l])
                return false;
        return true;
    }

    /// Lags in [-max_lag, max_lag] with zero weight.
    std::vector<Lag> holes() const
    {
        std::vector<Lag> out;
        for (Lag l = -max_lag; l <= max_lag; ++l)
            if (weights[l] == 0)
                out.push_back(l);
        return out;
    }
};

namespace detail {

inline LagTable finish_table(LagSeries<std::int64_t> w, const SchemeConfig& cfg, WeightSource src)
{
    LagTable t;
    t.weights = w.trimmed();
    t.max_lag = t.weights.bound();
    t.weights.for_each_nonzero([&](Lag, std::int64_t v) { t.total_pairs += v; });
    t.config = cfg;
    t.source = src;
    return t;
}

inline void require_coprime_kind(const SchemeConfig& cfg, std::string_view op)
{
    if (!cfg.is_coprime_kind())
        throw Error(ErrorCode::Unsupported,
                    std::string(op) + " is defined for prototype and super-Nyquist schemes only");
}

} // namespace detail

/// Brute-force weight function over every ordered pair of combined instants.
inline LagTable weight_enumerated(const InstantSet& instants)
{
    const auto& t = instants.combined;
    if (t.empty())
        return detail::finish_table(LagSeries<std::int64_t>(0), instants.config, WeightSource::Enumerated);
    LagSeries<std::int64_t> w(t.back() - t.front());
    for (Tick a : t)
        for (Tick b : t)
            w.add(a - b, 1);
    return detail::finish_table(std::move(w), instants.config, WeightSource::Enumerated);
}

inline LagTable weight_enumerated(const SchemeConfig& config)
{
    return weight_enumerated(sample_instants(config, 0));
}

/// Closed-form super-Nyquist weight function for r >= 1 periods: two self triangles at
/// multiples of 2M and 2N plus one impulse at each of +-|2Mn - 2Nm - 1|.
inline LagTable weight_closed(const SchemeConfig& config)
{
    if (config.kind != SchemeKind::SuperNyquist)
        throw Error(ErrorCode::UnsupportedScheme,
                    std::string("no closed-form weight function for ") + std::string(to_string(config.kind)) +
                        " schemes; use weight_enumerated");
    const Lag m = config.m;
    const Lag n = config.n;
    const Lag rn = Lag{config.periods} * n;
    const Lag rm = Lag{config.periods} * m;
    LagSeries<std::int64_t> w(std::max(2 * m * (rn - 1), 2 * n * (rm - 1)) + 1);
    for (Lag k = -(rn - 1); k <= rn - 1; ++k)
        w.add(2 * m * k, rn - (k < 0 ? -k : k));
    for (Lag k = -(rm - 1); k <= rm - 1; ++k)
        w.add(2 * n * k, rm - (k < 0 ? -k : k));
    for (Lag i = 0; i < rn; ++i) {
        for (Lag j = 0; j < rm; ++j) {
            const Lag c = 2 * m * i - 2 * n * j - 1;
            w.add(c, 1);
            w.add(-c, 1);
        }
    }
    return detail::finish_table(std::move(w), config, WeightSource::ClosedForm);
}

/// Self and cross difference multisets of a two-sampler scheme, each sorted ascending.
struct DifferenceSets {
    std::vector<Lag> self_m;    // sampler 1 (spacing M) pairs, both signs
    std::vector<Lag> self_n;    // sampler 2 (spacing N) pairs, both signs
    std::vector<Lag> cross_pos; // sampler-1 instant minus sampler-2 instant
    std::vector<Lag> cross_neg;
    SchemeConfig config;
};

inline DifferenceSets difference_sets(const SchemeConfig& config)
{
    detail::require_coprime_kind(config, "difference_sets");
    const InstantSet inst = sample_instants(config, 0);
    const auto& a = inst.per_sampler[0];
    const auto& b = inst.per_sampler[1];
    DifferenceSets d;
    d.config = config;
    for (Tick x : a)
        for (Tick y : a)
            d.self_m.push_back(x - y);
    for (Tick x : b)
        for (Tick y : b)
            d.self_n.push_back(x - y);
    for (Tick x : a)
        for (Tick y : b) {
            d.cross_pos.push_back(x - y);
            d.cross_neg.push_back(y - x);
        }
    for (auto* v : {&d.self_m, &d.self_n, &d.cross_pos, &d.cross_neg})
        std::sort(v->begin(), v->end());
    return d;
}

struct ClaimReport {
    bool cross_disjoint = false;                          // cross lags never coincide with self lags
    std::int64_t distinct_cross_count = 0;                // distinct values in cross_pos
    std::optional<bool> prototype_two_contributors;       // set for Prototype only
    std::vector<std::pair<Lag, Lag>> paired_cross_values; // (l, -l), l > 0, both in cross_pos
};

inline ClaimReport verify_claims(const SchemeConfig& config)
{
    const DifferenceSets d = difference_sets(config);
    ClaimReport rep;

    std::set<Lag> self(d.self_m.begin(), d.self_m.end());
    self.insert(d.self_n.begin(), d.self_n.end());
    const std::set<Lag> pos(d.cross_pos.begin(), d.cross_pos.end());
    std::set<Lag> cross = pos;
    cross.insert(d.cross_neg.begin(), d.cross_neg.end());

    rep.cross_disjoint = std::none_of(cross.begin(), cross.end(), [&](Lag l) { return self.count(l) > 0; });
    rep.distinct_cross_count = static_cast<std::int64_t>(pos.size());
    for (Lag l : pos)
        if (l > 0 && pos.count(-l))
            rep.paired_cross_values.emplace_back(l, -l);

    if (config.kind == SchemeKind::Prototype) {
        const LagTable z = weight_enumerated(config);
        bool ok = true;
        for (Lag l : cross)
            if (!self.count(l) && z.z(l) != 2)
                ok = false;
        rep.prototype_two_contributors = ok;
    }
    return rep;
}

} // namespace supernyquist

#endif
