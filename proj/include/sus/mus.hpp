#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "bit_vector.hpp"
#include "suffix_arrays.hpp"

namespace sus {

/// Closed 1-based interval [start, end].
struct Interval {
    pos_t start = 0;
    pos_t end = 0;

    [[nodiscard]] pos_t length() const noexcept { return end - start + 1; }
    [[nodiscard]] bool contains(const Interval& other) const noexcept {
        return start <= other.start && other.end <= end;
    }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.start << ',' << iv.end << ']';
}

/// Shortest interval containing both.
[[nodiscard]] constexpr Interval cover(const Interval& a, const Interval& b) noexcept {
    return {std::min(a.start, b.start), std::max(a.end, b.end)};
}

/// Minimal unique substrings as two marker bit vectors. MUS ordinal k is the
/// k-th set bit of both: MUSs never nest, so starts and ends sort alike.
class MusIndex {
   public:
    MusIndex() = default;

    MusIndex(BitVector mb, BitVector me) : mb_(std::move(mb)), me_(std::move(me)) {
        if (mb_.size() != me_.size()) throw std::invalid_argument("MUS marker vectors differ in length");
        if (mb_.ones() != me_.ones() || mb_.ones() == 0) throw std::invalid_argument("MUS marker vectors are inconsistent");
    }

    [[nodiscard]] pos_t text_length() const noexcept { return mb_.size(); }
    [[nodiscard]] pos_t count() const noexcept { return mb_.ones(); }

    [[nodiscard]] pos_t start(pos_t k) const {
        check_position(k, 1, count(), "MusIndex::start");
        return mb_.select1(k);
    }
    [[nodiscard]] pos_t end(pos_t k) const {
        check_position(k, 1, count(), "MusIndex::end");
        return me_.select1(k);
    }
    [[nodiscard]] pos_t length(pos_t k) const { return end(k) - start(k) + 1; }
    [[nodiscard]] Interval at(pos_t k) const { return {start(k), end(k)}; }

    /// Ordinal of the MUS with the largest end <= t, or nil.
    [[nodiscard]] pos_t pred_by_end(pos_t t) const {
        check_position(t, 1, text_length(), "MusIndex::pred_by_end");
        return me_.rank1(t);
    }

    /// Ordinal of the MUS with the smallest start >= s, or nil.
    [[nodiscard]] pos_t succ_by_start(pos_t s) const {
        check_position(s, 1, text_length(), "MusIndex::succ_by_start");
        const pos_t k = mb_.rank1(s - 1) + 1;
        return k > count() ? nil : k;
    }

    [[nodiscard]] std::vector<Interval> intervals() const {
        std::vector<Interval> out;
        out.reserve(count());
        for (pos_t k = 1; k <= count(); ++k) out.push_back(at(k));
        return out;
    }

    [[nodiscard]] const BitVector& begin_markers() const noexcept { return mb_; }
    [[nodiscard]] const BitVector& end_markers() const noexcept { return me_; }

    [[nodiscard]] std::uint64_t payload_bits() const noexcept { return mb_.payload_bits() + me_.payload_bits(); }
    [[nodiscard]] std::uint64_t aux_bits() const noexcept { return mb_.aux_bits() + me_.aux_bits(); }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return payload_bits() + aux_bits(); }

    void serialize(io::ByteWriter& out) const {
        mb_.serialize(out);
        me_.serialize(out);
    }

    static MusIndex deserialize(io::ByteReader& in) {
        auto mb = BitVector::deserialize(in);
        auto me = BitVector::deserialize(in);
        if (mb.size() != me.size() || mb.ones() != me.ones() || mb.ones() == 0) {
            throw io::format_error("MUS marker vectors are inconsistent");
        }
        return MusIndex(std::move(mb), std::move(me));
    }

    friend bool operator==(const MusIndex& a, const MusIndex& b) noexcept { return a.mb_ == b.mb_ && a.me_ == b.me_; }

   private:
    BitVector mb_;
    BitVector me_;
};

/// Derives MB/ME from the longest-repeat lengths: lre[i] is the length of the
/// longest repeating substring starting at i (1-based, lre[0] unused).
/// [i, i+lre[i]] is the shortest unique substring starting at i when it fits
/// in the text; it is minimal iff lre[i] <= lre[i+1], with lre[n+1] = infinity.
inline MusIndex mus_from_longest_repeats(std::span<const pos_t> lre, pos_t n) {
    BitBuilder mb(n);
    BitBuilder me(n);
    for (pos_t i = 1; i <= n; ++i) {
        const pos_t l = lre[i];
        if (i + l > n) continue;
        const pos_t next = i == n ? std::numeric_limits<pos_t>::max() : lre[i + 1];
        if (l <= next) {
            mb.set(i);
            me.set(i + l);
        }
    }
    return MusIndex(std::move(mb).build(), std::move(me).build());
}

/// lre[i] = max(LCP[ISA[i]], LCP[ISA[i]+1]).
inline MusIndex build_mus_from_isa_lcp(const SuffixContext& ctx) {
    const pos_t n = ctx.n;
    std::vector<pos_t> lre(n + 1, 0);
    for (pos_t i = 1; i <= n; ++i) lre[i] = std::max(ctx.lcp[ctx.isa[i]], ctx.lcp[ctx.isa[i] + 1]);
    return mus_from_longest_repeats(lre, n);
}

/// lre[i] = max(PLCP[i], PLCP[RankNext[i]]) with PLCP[nil] = 0. `plcp_at` is
/// any 1-based accessor (a plain array or SuccinctPlcp).
template <class PlcpAccess>
MusIndex build_mus_from_plcp_rank_next(const PlcpAccess& plcp_at, std::span<const pos_t> rank_next, pos_t n) {
    std::vector<pos_t> lre(n + 1, 0);
    for (pos_t i = 1; i <= n; ++i) {
        const pos_t next = rank_next[i];
        lre[i] = std::max<pos_t>(plcp_at[i], next == nil ? 0 : plcp_at[next]);
    }
    return mus_from_longest_repeats(lre, n);
}

}  // namespace sus
