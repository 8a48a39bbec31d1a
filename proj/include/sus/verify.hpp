#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pipeline.hpp"

namespace sus {

struct VerifyOptions {
    pos_t size_cap = oracle::kDefaultSizeCap;
    /// 0 checks every interval [s, t]; otherwise this many random intervals.
    pos_t sampled_intervals = 0;
    std::uint64_t seed = 1;
    std::size_t max_reported = 10;
    std::uint64_t probe_factor = 20;
};

struct VerifyReport {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> mismatches;

    [[nodiscard]] bool ok() const noexcept { return failures == 0; }
};

namespace detail {

inline std::string describe(const std::vector<Interval>& ivs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ivs.size(); ++i) os << (i ? "," : "") << ivs[i];
    os << '}';
    return os.str();
}

}  // namespace detail

/// Builds every structure for `text` and compares each queryable quantity with
/// the exhaustive oracle, plus the structural invariants the indexes rely on.
inline VerifyReport verify_against_oracle(const Text& text, const VerifyOptions& opts = {}) {
    VerifyReport rep;
    auto expect = [&](bool cond, auto&& describe) {
        ++rep.checks;
        if (cond) return;
        ++rep.failures;
        if (rep.mismatches.size() < opts.max_reported) rep.mismatches.push_back(describe());
    };

    const pos_t n = text.size();
    const oracle::Report ref(text, opts.size_cap);

    // both MUS builders, succinct PLCP
    const auto ctx = build_suffix_context(text);
    const auto mus_a = build_mus_from_isa_lcp(ctx);
    const auto splcp = SuccinctPlcp::build(ctx);
    const auto mus_b = build_mus_from_plcp_rank_next(splcp, ctx.rank_next, n);
    expect(mus_a == mus_b, [] { return std::string("MUS builders disagree"); });
    for (pos_t i = 1; i <= n; ++i) {
        expect(splcp[i] == ctx.plcp[i], [&] { return "succinct PLCP differs at " + std::to_string(i); });
    }

    const auto built = build_indexes(text);
    const auto& ivs = *built.interval;
    const auto& pts = *built.point;
    const auto mus = built.mus().intervals();
    expect(mus == ref.mus(), [&] { return "MUS set " + detail::describe(mus) + " != " + detail::describe(ref.mus()); });
    for (std::size_t k = 1; k < mus.size(); ++k) {
        expect(mus[k - 1].start < mus[k].start && mus[k - 1].end < mus[k].end,
               [&] { return "MUSs nest at ordinal " + std::to_string(k); });
    }

    std::vector<Interval> meaningful;
    for (const auto& m : mus) {
        if (pts.meaningful_starts()[m.start]) meaningful.push_back(m);
    }
    expect(meaningful == ref.meaningful_mus(), [&] {
        return "meaningful MUSs " + detail::describe(meaningful) + " != " + detail::describe(ref.meaningful_mus());
    });

    auto mus_inside = [&](const Interval& iv) {
        return std::count_if(mus.begin(), mus.end(), [&](const Interval& m) { return iv.contains(m); });
    };

    for (pos_t p = 1; p <= n; ++p) {
        const pos_t len = pts.length_at(p);
        expect(len == ref.lengths()[p], [&] {
            return "LENGTH[" + std::to_string(p) + "] = " + std::to_string(len) + ", expected " +
                   std::to_string(ref.lengths()[p]);
        });
        if (p < n) {
            const pos_t next = pts.length_at(p + 1);
            expect(len <= next + 1 && next <= len + 1, [&] { return "LENGTH jumps by more than one at " + std::to_string(p); });
        }

        ProbeCounter probes;
        const auto got = pts.query(p, &probes).intervals;
        const auto want = ref.sus(p);
        expect(got == want, [&] {
            return "SUS(" + std::to_string(p) + ") = " + detail::describe(got) + ", expected " + detail::describe(want);
        });
        expect(probes.count <= opts.probe_factor * (got.size() + 1),
               [&] { return "point query " + std::to_string(p) + " used " + std::to_string(probes.count) + " probes"; });
        if (!want.empty()) {
            expect(pts.leftmost(p) == want.front(), [&] { return "leftmost SUS wrong at " + std::to_string(p); });
            expect(pts.rightmost(p) == want.back(), [&] { return "rightmost SUS wrong at " + std::to_string(p); });
        }
        expect(pts.count(p) == got.size(), [&] { return "SUS count wrong at " + std::to_string(p); });
        for (const auto& iv : got) {
            expect(mus_inside(iv) == 1, [&] { return "SUS " + detail::describe({iv}) + " does not contain exactly one MUS"; });
            expect(p + 1 <= iv.start + len && iv.start <= p && p <= iv.end && iv.end + 1 <= p + len,
                   [&] { return "SUS " + detail::describe({iv}) + " outside the window of " + std::to_string(p); });
        }
    }

    auto check_interval = [&](pos_t s, pos_t t) {
        ProbeCounter probes;
        const auto got = ivs.query(s, t, &probes).intervals;
        const auto want = ref.sus(s, t);
        expect(got == want, [&] {
            return "SUS([" + std::to_string(s) + "," + std::to_string(t) + "]) = " + detail::describe(got) + ", expected " +
                   detail::describe(want);
        });
        expect(probes.count <= opts.probe_factor * (got.size() + 1), [&] {
            return "interval query [" + std::to_string(s) + "," + std::to_string(t) + "] used " +
                   std::to_string(probes.count) + " probes";
        });
    };
    if (opts.sampled_intervals == 0) {
        for (pos_t s = 1; s <= n; ++s) {
            for (pos_t t = s; t <= n; ++t) check_interval(s, t);
        }
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<pos_t> pick(1, n);
        for (pos_t q = 0; q < opts.sampled_intervals; ++q) {
            auto a = pick(rng);
            auto b = pick(rng);
            if (a > b) std::swap(a, b);
            check_interval(a, b);
        }
    }
    return rep;
}

}  // namespace sus
