#pragma once

#include <optional>
#include <utility>

#include "build_log.hpp"
#include "interval_sus.hpp"
#include "mus.hpp"
#include "point_sus.hpp"
#include "suffix_arrays.hpp"

namespace sus {

struct BuildOptions {
    bool interval = true;
    bool point = true;
};

/// Output of the construction pipeline. The MUS markers live inside the
/// interval index when one was kept.
struct BuiltIndexes {
    std::optional<MusIndex> mus_only;
    std::optional<IntervalSusIndex> interval;
    std::optional<PointSusIndex> point;
    BuildLog log;

    [[nodiscard]] const MusIndex& mus() const { return interval ? interval->mus() : *mus_only; }
};

/// Text -> suffix arrays -> MB/ME -> interval index -> LENGTH_DIFF -> point index.
/// Plain arrays are dropped as soon as the next stage no longer needs them;
/// the log records the bits of every live structure after each stage.
inline BuiltIndexes build_indexes(const Text& text, BuildOptions opts = {}) {
    if (!opts.interval && !opts.point) opts.interval = true;
    BuiltIndexes out;
    auto& log = out.log;
    const pos_t n = text.size();
    log.set_external_bits(text.bits());
    log.record("input text", 0);

    std::optional<MusIndex> mus;
    {
        auto ctx = build_suffix_context(text);
        log.record("suffix arrays SA/ISA/LCP/PLCP/Phi/RankNext", ctx.bits());
        mus = build_mus_from_isa_lcp(ctx);
        log.record("compute MB/ME", ctx.bits() + 64 * (n + 1) + mus->total_bits());
    }
    log.set_external_bits(0);
    log.record("free text and suffix arrays; input MB/ME", mus->total_bits());

    IntervalSusIndex ivs(std::move(*mus));
    mus.reset();
    log.record("construct RmQ on MUSlen", ivs.total_bits());

    if (opts.point) {
        auto diff = compute_length_diff(ivs);
        log.record("construct LENGTH_DIFF, LENGTH[1]", ivs.total_bits() + diff.bits());
        if (opts.interval) {
            log.set_external_bits(ivs.total_bits());
            out.point = PointSusIndex::build(ivs.mus(), std::move(diff), &log);
        } else {
            out.mus_only = std::move(ivs).release();
            log.record("free RmQ on MUSlen", out.mus_only->total_bits() + diff.bits());
            log.set_external_bits(out.mus_only->total_bits());
            out.point = PointSusIndex::build(*out.mus_only, std::move(diff), &log);
        }
        log.set_external_bits(0);
    }
    if (opts.interval) {
        out.interval = std::move(ivs);
    } else if (!out.mus_only) {
        out.mus_only = std::move(ivs).release();
    }
    return out;
}

}  // namespace sus
