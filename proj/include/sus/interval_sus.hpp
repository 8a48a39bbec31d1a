#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "mus.hpp"
#include "range_query.hpp"

namespace sus {

/// SUS answer set, sorted by start. All intervals share one length.
struct QueryResult {
    std::vector<Interval> intervals;

    [[nodiscard]] std::size_t occ() const noexcept { return intervals.size(); }
};

/// Interval-SUS index: MB/ME plus a range-minimum index over the simulated
/// MUS length array. Answers in O(occ) primitive probes.
class IntervalSusIndex {
   public:
    IntervalSusIndex() = default;

    explicit IntervalSusIndex(MusIndex mus) : mus_(std::move(mus)) {
        rmq_ = RangeQuery::build([this](pos_t k) { return mus_.length(k); }, mus_.count(), RangeMode::Min);
    }

    IntervalSusIndex(MusIndex mus, RangeQuery rmq) : mus_(std::move(mus)), rmq_(std::move(rmq)) {
        if (rmq_.size() != mus_.count() || rmq_.mode() != RangeMode::Min) {
            throw std::invalid_argument("range index does not match MUS count");
        }
    }

    [[nodiscard]] pos_t text_length() const noexcept { return mus_.text_length(); }
    [[nodiscard]] const MusIndex& mus() const noexcept { return mus_; }
    [[nodiscard]] const RangeQuery& rmq() const noexcept { return rmq_; }

    /// Gives up the range index and keeps the MUS markers.
    MusIndex release() && { return std::move(mus_); }

    /// Length shared by every SUS of [s, t].
    [[nodiscard]] pos_t shortest_length(pos_t s, pos_t t, ProbeCounter* probes = nullptr) const {
        return plan(s, t, probes).best;
    }

    /// All SUSs containing [s, t].
    [[nodiscard]] QueryResult query(pos_t s, pos_t t, ProbeCounter* probes = nullptr) const {
        const Plan p = plan(s, t, probes);
        QueryResult out;
        if (p.contained) {
            out.intervals.push_back({s, t});
            return out;
        }
        if (p.left && p.left->length() == p.best) out.intervals.push_back(*p.left);
        if (p.right && p.right->length() == p.best) out.intervals.push_back(*p.right);
        if (p.mid_lo <= p.mid_hi && p.mid_len == p.best) {
            // split around each reported minimum until a range's minimum exceeds best
            std::vector<std::pair<pos_t, pos_t>> pending;
            out.intervals.push_back(p.mid_mus);
            auto push = [&](pos_t lo, pos_t hi) {
                if (lo <= hi) pending.emplace_back(lo, hi);
            };
            push(p.mid_lo, p.mid_arg - 1);
            push(p.mid_arg + 1, p.mid_hi);
            while (!pending.empty()) {
                const auto [lo, hi] = pending.back();
                pending.pop_back();
                const pos_t k = rmq_.query(lo, hi);
                count_probe(probes, 3);
                const Interval iv = mus_.at(k);
                if (iv.length() != p.best) continue;
                out.intervals.push_back(iv);
                push(lo, k - 1);
                push(k + 1, hi);
            }
        }
        std::sort(out.intervals.begin(), out.intervals.end());
        return out;
    }

    [[nodiscard]] std::uint64_t payload_bits() const noexcept { return mus_.payload_bits() + rmq_.payload_bits(); }
    [[nodiscard]] std::uint64_t aux_bits() const noexcept { return mus_.aux_bits() + rmq_.aux_bits(); }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return payload_bits() + aux_bits(); }

   private:
    struct Plan {
        bool contained = false;
        std::optional<Interval> left;
        std::optional<Interval> right;
        pos_t mid_lo = 1;
        pos_t mid_hi = 0;
        pos_t mid_arg = nil;
        Interval mid_mus{};
        pos_t mid_len = 0;
        pos_t best = 0;
    };

    [[nodiscard]] Plan plan(pos_t s, pos_t t, ProbeCounter* probes) const {
        if (s < 1 || s > t || t > text_length()) throw std::out_of_range("invalid query interval");
        Plan p;
        const pos_t l = mus_.pred_by_end(t);
        const pos_t r = mus_.succ_by_start(s);
        count_probe(probes, 2);
        if (l != nil) {
            const pos_t ls = mus_.start(l);
            count_probe(probes);
            if (ls >= s) {
                // a MUS inside [s, t] makes [s, t] itself unique
                p.contained = true;
                p.best = t - s + 1;
                return p;
            }
            p.left = cover({s, t}, {ls, t});
        }
        if (r != nil) {
            const pos_t re = mus_.end(r);
            count_probe(probes);
            p.right = cover({s, t}, {s, re});
        }
        p.best = std::numeric_limits<pos_t>::max();
        if (p.left) p.best = std::min(p.best, p.left->length());
        if (p.right) p.best = std::min(p.best, p.right->length());
        p.mid_lo = l == nil ? 1 : l + 1;
        p.mid_hi = r == nil ? mus_.count() : r - 1;
        if (p.mid_lo <= p.mid_hi) {
            p.mid_arg = rmq_.query(p.mid_lo, p.mid_hi);
            p.mid_mus = mus_.at(p.mid_arg);
            count_probe(probes, 3);
            p.mid_len = p.mid_mus.length();
            p.best = std::min(p.best, p.mid_len);
        }
        return p;
    }

    MusIndex mus_;
    RangeQuery rmq_;
};

}  // namespace sus
