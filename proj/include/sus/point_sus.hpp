#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "build_log.hpp"
#include "interval_sus.hpp"
#include "range_query.hpp"
#include "ternary_seq.hpp"

namespace sus {

/// Raw LENGTH_DIFF before it is indexed: diff[0] = 0, diff[i-1] = LENGTH[i] - LENGTH[i-1].
struct LengthDiff {
    std::vector<std::int8_t> diff;
    pos_t length1 = 0;

    [[nodiscard]] std::uint64_t bits() const noexcept { return 8 * diff.capacity() + 64; }
};

/// LENGTH[p] is the length of the first SUS reported for [p, p].
inline LengthDiff compute_length_diff(const IntervalSusIndex& ivs) {
    const pos_t n = ivs.text_length();
    LengthDiff out;
    out.diff.assign(n, 0);
    pos_t prev = 0;
    for (pos_t p = 1; p <= n; ++p) {
        const pos_t len = ivs.shortest_length(p, p);
        if (p == 1) {
            out.length1 = len;
        } else {
            const auto d = static_cast<long long>(len) - static_cast<long long>(prev);
            if (d < -1 || d > 1) throw std::logic_error("SUS lengths of adjacent positions differ by more than one");
            out.diff[p - 1] = static_cast<std::int8_t>(d);
        }
        prev = len;
    }
    return out;
}

/// Point-SUS index: LENGTH as a ternary difference sequence plus the
/// meaningful-MUS start markers. Leftmost and rightmost SUS take O(1) probes,
/// the rest are enumerated through the markers.
class PointSusIndex {
   public:
    PointSusIndex() = default;

    PointSusIndex(TernarySeq diff, pos_t length1, BitVector mus_begin)
        : diff_(std::move(diff)), length1_(length1), mus_begin_(std::move(mus_begin)) {
        if (diff_.size() != mus_begin_.size()) throw std::invalid_argument("point index parts differ in length");
        if (length1_ == 0 || length1_ > diff_.size()) throw std::invalid_argument("invalid first SUS length");
    }

    /// Indexes diff, drops the raw array, then marks meaningful MUSs using a
    /// transient range-maximum index over LENGTH.
    static PointSusIndex build(const MusIndex& mus, LengthDiff&& raw, BuildLog* log = nullptr) {
        const pos_t n = mus.text_length();
        if (raw.diff.size() != n) throw std::invalid_argument("LENGTH_DIFF does not match text length");
        PointSusIndex idx;
        idx.length1_ = raw.length1;
        idx.diff_ = TernarySeq::build(raw.diff);
        if (log) log->record("index LENGTH_DIFF (rank/select)", raw.bits() + idx.diff_.total_bits());
        raw.diff = {};
        raw.diff.shrink_to_fit();
        if (log) log->record("free raw LENGTH_DIFF", idx.diff_.total_bits());

        BitBuilder marks(n);
        {
            const auto rmax = RangeQuery::build([&idx](pos_t i) { return idx.length_at(i); }, n, RangeMode::Max);
            if (log) log->record("build range-max over LENGTH", idx.diff_.total_bits() + rmax.total_bits());
            for (pos_t k = 1; k <= mus.count(); ++k) {
                const Interval m = mus.at(k);
                const pos_t x = rmax.query(m.start, m.end);
                const pos_t len = idx.length_at(x);
                if (len > m.length()) throw std::logic_error("LENGTH exceeds a covering MUS length");
                if (len == m.length()) marks.set(m.start);
            }
            if (log) {
                log->record("mark meaningful MUS starts", idx.diff_.total_bits() + rmax.total_bits() + marks.bits());
            }
        }
        idx.mus_begin_ = std::move(marks).build();
        if (log) log->record("free range-max", idx.total_bits());
        return idx;
    }

    static PointSusIndex build(const IntervalSusIndex& ivs) { return build(ivs.mus(), compute_length_diff(ivs)); }

    [[nodiscard]] pos_t text_length() const noexcept { return diff_.size(); }
    [[nodiscard]] pos_t length1() const noexcept { return length1_; }
    [[nodiscard]] const TernarySeq& diff() const noexcept { return diff_; }
    [[nodiscard]] const BitVector& meaningful_starts() const noexcept { return mus_begin_; }

    [[nodiscard]] pos_t length_at(pos_t i, ProbeCounter* probes = nullptr) const {
        check(i);
        count_probe(probes, 2);
        return length1_ + diff_.rank(1, i) - diff_.rank(-1, i);
    }

    /// Nearest position before q whose LENGTH differs from LENGTH[q], or nil.
    [[nodiscard]] pos_t pred_neq(pos_t q, ProbeCounter* probes = nullptr) const {
        check(q);
        pos_t best = nil;
        for (int c : {-1, 1}) {
            const pos_t sel = diff_.select(c, diff_.rank(c, q));
            count_probe(probes, 2);
            if (sel != nil) best = std::max(best, sel - 1);
        }
        return best;
    }

    /// Nearest position after q whose LENGTH differs from LENGTH[q], or nil.
    [[nodiscard]] pos_t succ_neq(pos_t q, ProbeCounter* probes = nullptr) const {
        check(q);
        pos_t best = nil;
        for (int c : {-1, 1}) {
            const pos_t sel = diff_.select(c, diff_.rank(c, q) + 1);
            count_probe(probes, 2);
            if (sel != nil) best = best == nil ? sel : std::min(best, sel);
        }
        return best;
    }

    /// Largest meaningful MUS start <= q, or nil.
    [[nodiscard]] pos_t pred_meaningful_start(pos_t q, ProbeCounter* probes = nullptr) const {
        check(q);
        count_probe(probes, 2);
        return mus_begin_.pred1(q);
    }

    /// Smallest meaningful MUS start >= q, or nil.
    [[nodiscard]] pos_t succ_meaningful_start(pos_t q, ProbeCounter* probes = nullptr) const {
        check(q);
        count_probe(probes, 3);
        return mus_begin_.succ1(q);
    }

    [[nodiscard]] Interval leftmost(pos_t p, ProbeCounter* probes = nullptr) const {
        return leftmost_with(p, length_at(p, probes), probes);
    }

    [[nodiscard]] Interval rightmost(pos_t p, ProbeCounter* probes = nullptr) const {
        return rightmost_with(p, length_at(p, probes), probes);
    }

    /// All SUSs containing p, sorted by start.
    [[nodiscard]] QueryResult query(pos_t p, ProbeCounter* probes = nullptr) const {
        const pos_t len = length_at(p, probes);
        const Interval lm = leftmost_with(p, len, probes);
        const Interval rm = rightmost_with(p, len, probes);
        QueryResult out;
        out.intervals.push_back(lm);
        if (lm.start == rm.start) return out;
        pos_t s = lm.start;
        for (;;) {
            s = mus_begin_.select1(mus_begin_.rank1(s) + 1);
            count_probe(probes, 2);
            if (s == nil || s >= rm.start) break;
            out.intervals.push_back({s, s + len - 1});
        }
        out.intervals.push_back(rm);
        return out;
    }

    /// |query(p)| without enumerating.
    [[nodiscard]] pos_t count(pos_t p, ProbeCounter* probes = nullptr) const {
        const pos_t len = length_at(p, probes);
        const Interval lm = leftmost_with(p, len, probes);
        const Interval rm = rightmost_with(p, len, probes);
        if (lm.start == rm.start) return 1;
        count_probe(probes, 2);
        return mus_begin_.rank1(rm.start - 1) - mus_begin_.rank1(lm.start) + 2;
    }

    [[nodiscard]] std::uint64_t payload_bits() const noexcept {
        return diff_.payload_bits() + mus_begin_.payload_bits() + 64;
    }
    [[nodiscard]] std::uint64_t aux_bits() const noexcept { return diff_.aux_bits() + mus_begin_.aux_bits(); }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return payload_bits() + aux_bits(); }

    void serialize(io::ByteWriter& out) const {
        out.put_u64(length1_);
        diff_.serialize(out);
        mus_begin_.serialize(out);
    }

    static PointSusIndex deserialize(io::ByteReader& in) {
        const auto length1 = in.get_u64();
        auto diff = TernarySeq::deserialize(in);
        auto mus_begin = BitVector::deserialize(in);
        if (diff.size() != mus_begin.size() || length1 == 0 || length1 > diff.size()) {
            throw io::format_error("point index sections are inconsistent");
        }
        return PointSusIndex(std::move(diff), length1, std::move(mus_begin));
    }

   private:
    void check(pos_t i) const { check_position(i, 1, text_length(), "PointSusIndex"); }

    static pos_t require(pos_t b, const char* what) {
        if (b == nil) throw std::logic_error(what);
        return b;
    }

    [[nodiscard]] Interval leftmost_with(pos_t p, pos_t len, ProbeCounter* probes) const {
        const pos_t window = p > len ? p - len + 1 : 1;
        const pos_t b = require(succ_meaningful_start(window, probes), "no meaningful MUS start right of the SUS window");
        if (b >= p) return {p, p + len - 1};
        const pos_t q = pred_neq(p, probes);
        if (q != nil && q >= window && length_at(q, probes) > len) return {q + 1, q + len};
        return {b, b + len - 1};
    }

    [[nodiscard]] Interval rightmost_with(pos_t p, pos_t len, ProbeCounter* probes) const {
        const pos_t q = succ_neq(p, probes);
        if (q != nil) {
            const pos_t lq = length_at(q, probes);
            if (q == p + 1 && lq < len) return {p, p + len - 1};
            if (q <= p + len - 1 && lq > len) return {q - len, q - 1};
        }
        const pos_t b = require(pred_meaningful_start(p, probes), "no meaningful MUS start left of the query");
        return {b, b + len - 1};
    }

    TernarySeq diff_;
    pos_t length1_ = 0;
    BitVector mus_begin_;
};

}  // namespace sus
