// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.
//
// Tolerances and runtime limits are fixed here and never tuned per run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "supernyquist/bias.hpp"
#include "supernyquist/diffset.hpp"
#include "supernyquist/estimator.hpp"
#include "supernyquist/experiments.hpp"
#include "supernyquist/scheme.hpp"
#include "supernyquist/signal.hpp"

namespace sn = supernyquist;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s; // <= 0: no runtime bound
    std::function<Outcome()> check;
};

constexpr int kSpectrumGrid = 1024;
constexpr int kBiasGrid = 4096;
constexpr int kSnapshots = 10;
constexpr std::uint64_t kSeed = sn::kPresetSeed;
constexpr double kFs = 500.0;

const std::vector<std::pair<int, int>> kFigurePairs = {{4, 3}, {3, 4}, {5, 3}, {3, 5}};

sn::SchemeConfig coprime(sn::SchemeKind k, int m, int n, int r = 1) { return sn::make_coprime_scheme(k, m, n, r); }

/// 50 co-prime pairs drawn uniformly from [2, 20]^2 with a fixed seed.
std::vector<std::pair<int, int>> random_pairs()
{
    std::mt19937_64 gen(20240601);
    std::uniform_int_distribution<int> d(2, 20);
    std::vector<std::pair<int, int>> out;
    while (out.size() < 50) {
        const int m = d(gen), n = d(gen);
        if (std::gcd(m, n) == 1)
            out.emplace_back(m, n);
    }
    return out;
}

std::string fmt(double v)
{
    char b[32];
    std::snprintf(b, sizeof b, "%.4g", v);
    return b;
}

/// Estimated spectrum for physical tones (Hz) on a scheme's own grid.
sn::SpectrumEstimate scenario(const sn::SchemeConfig& c, const std::vector<double>& hertz)
{
    sn::SignalSpec sig;
    sig.seed = kSeed;
    for (double f : hertz)
        sig.tones.push_back(sn::physical_tone(f, kFs, c));
    return sn::correlogram_psd(c, sig, kSnapshots, kSpectrumGrid);
}

/// Every target bin has a distinct peak among `peaks` within +-tol bins.
bool peaks_match(const std::vector<sn::Peak>& peaks, const std::vector<long>& targets, long tol, std::string& detail)
{
    std::vector<bool> used(peaks.size(), false);
    bool ok = peaks.size() >= targets.size();
    for (long t : targets) {
        long best = -1, best_off = 1L << 40;
        for (std::size_t i = 0; i < peaks.size(); ++i) {
            const long off = static_cast<long>(peaks[i].bin) - t;
            if (!used[i] && std::labs(off) < std::labs(best_off)) {
                best = static_cast<long>(i);
                best_off = off;
            }
        }
        detail += " target " + std::to_string(t) + ":";
        if (best < 0) {
            detail += "none";
            ok = false;
            continue;
        }
        detail += std::to_string(peaks[best].bin) + "(" + (best_off >= 0 ? "+" : "") + std::to_string(best_off) + ")";
        if (std::labs(best_off) <= tol)
            used[best] = true;
        else
            ok = false;
    }
    return ok;
}

std::vector<long> target_bins(const sn::SchemeConfig& c, const std::vector<double>& hertz)
{
    std::vector<long> out;
    for (double f : hertz)
        out.push_back(sn::nearest_bin(f / (c.grid_denominator * kFs / 2.0), kSpectrumGrid));
    return out;
}

std::vector<Criterion> criteria()
{
    using sn::SchemeKind;
    std::vector<Criterion> out;

    out.push_back({1, "closed-form weights equal enumeration (4 pairs x r=1..4)", 1.0, [] {
                       int checked = 0;
                       for (const auto& [m, n] : kFigurePairs)
                           for (int r = 1; r <= 4; ++r) {
                               const auto c = coprime(SchemeKind::SuperNyquist, m, n, r);
                               if (!(sn::weight_closed(c).weights == sn::weight_enumerated(c).weights))
                                   return Outcome{false, "mismatch at (" + std::to_string(m) + "," +
                                                             std::to_string(n) + ") r=" + std::to_string(r)};
                               ++checked;
                           }
                       return Outcome{true, std::to_string(checked) + " configurations equal"};
                   }});

    out.push_back({2, "cross lags disjoint from self lags and MN distinct (50 pairs)", 5.0, [] {
                       for (const auto& [m, n] : random_pairs()) {
                           const auto rep = sn::verify_claims(coprime(SchemeKind::SuperNyquist, m, n));
                           if (!rep.cross_disjoint || rep.distinct_cross_count != std::int64_t{m} * n)
                               return Outcome{false, "fails at (" + std::to_string(m) + "," + std::to_string(n) + ")"};
                       }
                       return Outcome{true, "50 random pairs in [2,20]"};
                   }});

    out.push_back({3, "prototype lags in L_C - L_S have exactly 2 contributors (50 pairs)", 5.0, [] {
                       for (const auto& [m, n] : random_pairs()) {
                           const auto rep = sn::verify_claims(coprime(SchemeKind::Prototype, m, n));
                           if (!rep.prototype_two_contributors.value_or(false))
                               return Outcome{false, "fails at (" + std::to_string(m) + "," + std::to_string(n) + ")"};
                       }
                       return Outcome{true, "50 random pairs in [2,20]"};
                   }});

    out.push_back({4, "bias closed form = DFT of z = |A|^2/s within 1e-9 (4096 pts)", 5.0, [] {
                       double worst = 0.0;
                       for (const auto& [m, n] : kFigurePairs)
                           for (int r = 1; r <= 4; ++r) {
                               const auto c = coprime(SchemeKind::SuperNyquist, m, n, r);
                               const auto a = sn::bias_closed(c, kBiasGrid);
                               const auto b = sn::bias_from_weights(sn::weight_enumerated(c), kBiasGrid);
                               const auto f = sn::bias_factorized(c, kBiasGrid);
                               for (std::size_t g = 0; g < a.values.size(); ++g)
                                   worst = std::max({worst, std::abs(a.values[g] - b.values[g]),
                                                     std::abs(a.values[g] - f.values[g]),
                                                     std::abs(b.values[g] - f.values[g])});
                           }
                       return Outcome{worst < 1e-9, "max pointwise deviation " + fmt(worst)};
                   }});

    out.push_back({5, "main-lobe width ratio super-Nyquist/prototype in [0.35, 0.65]", 0.0, [] {
                       Outcome o{true, ""};
                       for (const auto& [m, n] : kFigurePairs) {
                           const double ws = sn::main_lobe_width(sn::bias_closed(coprime(SchemeKind::SuperNyquist, m, n)));
                           const double wp = sn::main_lobe_width(
                               sn::bias_from_weights(sn::weight_enumerated(coprime(SchemeKind::Prototype, m, n))));
                           const double ratio = ws / wp;
                           o.pass = o.pass && ratio >= 0.35 && ratio <= 0.65;
                           o.detail += " (" + std::to_string(m) + "," + std::to_string(n) + "):" + fmt(ratio);
                       }
                       return o;
                   }});

    out.push_back({6, "(4,3) super-Nyquist main-lobe width strictly decreases over r=1..4", 0.0, [] {
                       Outcome o{true, ""};
                       double prev = 1e9;
                       for (int r = 1; r <= 4; ++r) {
                           const double w = sn::main_lobe_width(sn::bias_closed(coprime(SchemeKind::SuperNyquist, 4, 3, r)));
                           o.pass = o.pass && w < prev;
                           prev = w;
                           o.detail += " r" + std::to_string(r) + ":" + fmt(w);
                       }
                       return o;
                   }});

    out.push_back({7, "frequency normalization table reproduced exactly", 0.0, [] {
                       struct Row {
                           double hz, sn;
                           std::optional<double> proto;
                       };
                       const Row rows[] = {{50, 0.1, 0.2},         {150, 0.3, 0.6},          {250, 0.5, 1.0},
                                           {300, 0.6, std::nullopt}, {450, 0.9, std::nullopt}, {500, 1.0, std::nullopt}};
                       int defined = 0, dashed = 0;
                       for (const auto& r : rows) {
                           if (sn::map_frequency(r.hz, kFs, SchemeKind::SuperNyquist) != r.sn)
                               return Outcome{false, "super-Nyquist row " + fmt(r.hz)};
                           ++defined;
                           const auto p = sn::map_frequency(r.hz, kFs, SchemeKind::Prototype);
                           if (p != r.proto)
                               return Outcome{false, "prototype row " + fmt(r.hz)};
                           r.proto ? ++defined : ++dashed;
                       }
                       return Outcome{defined == 9 && dashed == 3,
                                      std::to_string(defined) + " defined, " + std::to_string(dashed) + " unrepresentable"};
                   }});

    out.push_back({8, "50/150 Hz: both schemes' top-2 peaks within +-2 bins", 2.0, [] {
                       const std::vector<double> hz = {50, 150};
                       Outcome o{true, ""};
                       for (auto kind : {SchemeKind::SuperNyquist, SchemeKind::Prototype}) {
                           const auto c = coprime(kind, 4, 3);
                           std::string d;
                           const bool ok = peaks_match(sn::find_peaks(scenario(c, hz), 2), target_bins(c, hz), 2, d);
                           o.pass = o.pass && ok;
                           o.detail += std::string(" ") + std::string(sn::to_string(kind)) + ":" + d;
                       }
                       return o;
                   }});

    out.push_back({9, "50/150/300 Hz: super-Nyquist top-3 within +-2 bins; prototype misses 300 Hz", 0.0, [] {
                       const std::vector<double> hz = {50, 150, 300};
                       Outcome o{true, ""};
                       const auto s = coprime(SchemeKind::SuperNyquist, 4, 3);
                       std::string d;
                       o.pass = peaks_match(sn::find_peaks(scenario(s, hz), 3), target_bins(s, hz), 2, d);
                       o.detail = " super-nyquist:" + d;

                       const auto p = coprime(SchemeKind::Prototype, 4, 3);
                       const long truth = target_bins(p, {300})[0];
                       const auto all = sn::find_peaks(scenario(p, hz), kSpectrumGrid);
                       const bool near = std::any_of(all.begin(), all.end(), [&](const sn::Peak& pk) {
                           return std::labs(static_cast<long>(pk.bin) - truth) <= 5;
                       });
                       o.pass = o.pass && !near;
                       o.detail += " prototype: true 300 Hz bin " + std::to_string(truth) +
                                   (near ? " has a peak" : " has no peak within 5 bins") +
                                   (truth >= kSpectrumGrid ? " (bin lies beyond the [0, pi] grid)" : "");
                       return o;
                   }});

    out.push_back({10, "nu = {0.1,0.3,0.6,0.9}: super-Nyquist top-4 within +-2 bins", 0.0, [] {
                       const std::vector<double> hz = {50, 150, 300, 450};
                       const auto s = coprime(SchemeKind::SuperNyquist, 4, 3);
                       std::string d;
                       const bool ok = peaks_match(sn::find_peaks(scenario(s, hz), 4), target_bins(s, hz), 2, d);
                       return Outcome{ok, d};
                   }});

    out.push_back({11, "estimator identities: constant->bias, positivity, path agreement", 0.0, [] {
                       double worst_const = 0, worst_path = 0, min_psd = 1e300;
                       for (const auto& [m, n] : kFigurePairs) {
                           for (auto kind : {SchemeKind::SuperNyquist, SchemeKind::Prototype}) {
                               const auto c = coprime(kind, m, n);
                               const auto omega = sn::omega_grid(kSpectrumGrid);
                               std::vector<double> direct(omega.size(), 0.0);
                               for (int k = 0; k < kSnapshots; ++k) {
                                   const auto inst = sn::sample_instants(c, k);
                                   sn::add_snapshot_power(direct, omega, inst,
                                                          std::vector<double>(inst.combined.size(), 1.0));
                               }
                               const double s = sn::default_normalization(c);
                               const auto w = sn::bias_from_weights(sn::weight_enumerated(c), kSpectrumGrid, s);
                               for (std::size_t g = 0; g < omega.size(); ++g)
                                   worst_const = std::max(worst_const, std::abs(direct[g] / (kSnapshots * s) - w.values[g]) /
                                                                           std::max(1e-300, *std::max_element(w.values.begin(), w.values.end())));
                           }
                       }
                       std::mt19937_64 gen(99);
                       std::uniform_int_distribution<int> f(2, 12);
                       std::uniform_real_distribution<double> nu(0.02, 0.98);
                       for (int sc = 0; sc < 20;) {
                           const int m = f(gen), n = f(gen);
                           if (std::gcd(m, n) != 1)
                               continue;
                           const auto c = coprime(sc % 2 ? SchemeKind::Prototype : SchemeKind::SuperNyquist, m, n, 1 + sc % 3);
                           sn::SignalSpec spec;
                           spec.seed = gen();
                           spec.noise_std = sc % 3 == 0 ? 0.0 : 0.3;
                           for (int t = 0; t <= sc % 4; ++t)
                               spec.tones.push_back({1.0, nu(gen)});
                           const auto a = sn::correlogram_psd(c, spec, kSnapshots, kSpectrumGrid, sn::PsdPath::Direct);
                           const auto b = sn::correlogram_psd(c, spec, kSnapshots, kSpectrumGrid, sn::PsdPath::LagSums);
                           const double peak = *std::max_element(a.psd.begin(), a.psd.end());
                           for (std::size_t g = 0; g < a.psd.size(); ++g) {
                               min_psd = std::min(min_psd, a.psd[g]);
                               worst_path = std::max(worst_path, std::abs(a.psd[g] - b.psd[g]) / peak);
                           }
                           ++sc;
                       }
                       const bool ok = worst_const < 1e-8 && worst_path < 1e-8 && min_psd >= 0.0;
                       return Outcome{ok, "constant rel err " + fmt(worst_const) + ", path rel err " + fmt(worst_path) +
                                              ", min psd " + fmt(min_psd)};
                   }});

    out.push_back({12, "multi-level: {3,4} == super-Nyquist (4,3); {2,3,5} sum rule and d/3 grid", 0.0, [] {
                       const int two[] = {3, 4};
                       const auto ml = sn::make_multilevel_scheme(two);
                       const auto s = coprime(SchemeKind::SuperNyquist, 4, 3);
                       const bool same_instants = sn::sample_instants(ml, 0).combined == sn::sample_instants(s, 0).combined;
                       const bool same_weights = sn::weight_enumerated(ml).weights == sn::weight_enumerated(s).weights;
                       const int three[] = {2, 3, 5};
                       bool sum_ok = true;
                       for (int r = 1; r <= 3; ++r) {
                           const auto c = sn::make_multilevel_scheme(three, r);
                           const auto z = sn::weight_enumerated(c);
                           sum_ok = sum_ok && z.total_pairs == std::int64_t{10 * r} * (10 * r) && z.is_symmetric() &&
                                    c.grid_denominator == 3 && z.source == sn::WeightSource::Enumerated;
                       }
                       return Outcome{same_instants && same_weights && sum_ok,
                                      std::string("instants ") + (same_instants ? "equal" : "differ") + ", weights " +
                                          (same_weights ? "equal" : "differ") + ", {2,3,5} " + (sum_ok ? "ok" : "bad")};
                   }});
    return out;
}

} // namespace

int main()
{
    int failed = 0;
    for (const auto& c : criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += " [runtime " + fmt(secs) + " s exceeds " + fmt(c.time_limit_s) + " s]";
        }
        std::printf("%s AC%02d %s |%s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                    o.detail.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of 12 criteria passed\n", 12 - failed);
    return failed == 0 ? 0 : 1;
}
