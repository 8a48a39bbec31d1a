#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bit_vector.hpp"
#include "int_vector.hpp"

namespace sus {

enum class RangeMode : std::uint8_t { Min = 0, Max = 1 };

/// Static range-minimum / range-maximum index that answers without the values.
///
/// The values are encoded as the balanced-parentheses sequence (preorder) of
/// their 2d-min-heap: node k's parent is the nearest k' < k whose value is at
/// least as good, with a virtual root 0. For i < j the answer is i when i is an
/// ancestor of j; otherwise it is the child of lca(i, j) on the path to j,
/// whose opening parenthesis immediately follows the rightmost minimum of the
/// excess sequence between the openings of i and j. Ties resolve to the
/// smallest index.
///
/// Space: 2(n+1) bits of parentheses, their rank/select directories, one
/// excess minimum per 512-bit block and a sparse table over block minima.
class RangeQuery {
   public:
    static constexpr pos_t kBlockBits = 512;

    RangeQuery() = default;

    /// value_at(k) for k in [1, domain_len]; it is not retained.
    template <class Accessor>
    static RangeQuery build(Accessor&& value_at, pos_t domain_len, RangeMode mode) {
        if (domain_len == 0) throw std::invalid_argument("range query domain is empty");
        const pos_t len = 2 * (domain_len + 1);
        std::vector<std::uint64_t> words((len + 63) / 64, 0);
        pos_t cursor = 0;
        auto emit = [&](bool open) {
            if (open) words[cursor / 64] |= std::uint64_t{1} << (cursor % 64);
            ++cursor;
        };
        std::vector<long long> stack;
        emit(true);
        for (pos_t k = 1; k <= domain_len; ++k) {
            const auto v = static_cast<long long>(value_at(k));
            while (!stack.empty() && (mode == RangeMode::Min ? v < stack.back() : v > stack.back())) {
                stack.pop_back();
                emit(false);
            }
            stack.push_back(v);
            emit(true);
        }
        for (std::size_t k = 0; k <= stack.size(); ++k) emit(false);

        RangeQuery rq;
        rq.n_ = domain_len;
        rq.mode_ = mode;
        rq.bp_ = BitVector(std::move(words), len);
        rq.build_block_tables();
        return rq;
    }

    /// Index of the leftmost extremum of [i, j].
    [[nodiscard]] pos_t query(pos_t i, pos_t j) const {
        if (i < 1 || i > j || j > n_) {
            throw std::out_of_range("range query [" + std::to_string(i) + ", " + std::to_string(j) +
                                    "] outside [1, " + std::to_string(n_) + "]");
        }
        if (i == j) return i;
        const pos_t x = bp_.select1(i + 1) - 1;
        const pos_t y = bp_.select1(j + 1) - 1;
        const auto at_x = excess_after(x);
        const auto best = range_min(x, y);
        if (best.value == at_x) return i;
        return bp_.rank1(best.pos + 2) - 1;
    }

    [[nodiscard]] pos_t size() const noexcept { return n_; }
    [[nodiscard]] RangeMode mode() const noexcept { return mode_; }

    [[nodiscard]] std::uint64_t payload_bits() const noexcept { return bp_.payload_bits(); }
    [[nodiscard]] std::uint64_t aux_bits() const noexcept {
        std::uint64_t bits = bp_.aux_bits() + block_min_.bits();
        for (const auto& level : table_) bits += level.bits();
        return bits;
    }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return payload_bits() + aux_bits(); }

    void serialize(io::ByteWriter& out) const {
        out.put_u8(static_cast<std::uint8_t>(mode_));
        out.put_u64(n_);
        bp_.serialize(out);
    }

    static RangeQuery deserialize(io::ByteReader& in) {
        RangeQuery rq;
        const auto mode = in.get_u8();
        if (mode > 1) throw io::format_error("unknown range query mode");
        rq.mode_ = static_cast<RangeMode>(mode);
        rq.n_ = in.get_u64();
        rq.bp_ = BitVector::deserialize(in);
        if (rq.n_ == 0 || rq.bp_.size() != 2 * (rq.n_ + 1) || rq.bp_.ones() != rq.n_ + 1) {
            throw io::format_error("range query parentheses do not match domain");
        }
        rq.build_block_tables();
        return rq;
    }

   private:
    struct Extremum {
        long long value;
        pos_t pos;  // 0-based bit index
    };

    struct ByteTables {
        std::array<std::int8_t, 256> delta{};
        std::array<std::int8_t, 256> min_prefix{};
        std::array<std::uint8_t, 256> min_pos{};  // rightmost
        ByteTables() {
            for (int v = 0; v < 256; ++v) {
                int e = 0;
                int best = 127;
                int pos = 0;
                for (int b = 0; b < 8; ++b) {
                    e += ((v >> b) & 1) ? 1 : -1;
                    if (e <= best) {
                        best = e;
                        pos = b;
                    }
                }
                delta[v] = static_cast<std::int8_t>(e);
                min_prefix[v] = static_cast<std::int8_t>(best);
                min_pos[v] = static_cast<std::uint8_t>(pos);
            }
        }
    };

    static const ByteTables& tables() {
        static const ByteTables t;
        return t;
    }

    // Excess after reading bits [0, q].
    [[nodiscard]] long long excess_after(pos_t q) const {
        return 2 * static_cast<long long>(bp_.rank1(q + 1)) - static_cast<long long>(q + 1);
    }

    [[nodiscard]] bool bit(pos_t q) const noexcept { return (bp_.words()[q / 64] >> (q % 64)) & 1U; }

    // Rightmost minimum excess over bit indices [lo, hi].
    [[nodiscard]] Extremum scan(pos_t lo, pos_t hi) const {
        const auto& t = tables();
        long long e = lo == 0 ? 0 : excess_after(lo - 1);
        Extremum best{std::numeric_limits<long long>::max(), lo};
        pos_t q = lo;
        auto step_bit = [&] {
            e += bit(q) ? 1 : -1;
            if (e <= best.value) best = {e, q};
            ++q;
        };
        while (q <= hi && q % 8 != 0) step_bit();
        const auto words = bp_.words();
        while (q + 7 <= hi) {
            const auto byte = static_cast<unsigned>((words[q / 64] >> (q % 64)) & 0xffU);
            const long long cand = e + t.min_prefix[byte];
            if (cand <= best.value) best = {cand, q + t.min_pos[byte]};
            e += t.delta[byte];
            q += 8;
        }
        while (q <= hi) step_bit();
        return best;
    }

    [[nodiscard]] pos_t block_count() const noexcept { return (bp_.size() + kBlockBits - 1) / kBlockBits; }

    [[nodiscard]] Extremum scan_block(pos_t b) const {
        return scan(b * kBlockBits, std::min(bp_.size(), (b + 1) * kBlockBits) - 1);
    }

    [[nodiscard]] pos_t table_at(unsigned level, pos_t b) const {
        return level == 0 ? b : table_[level - 1].get(b);
    }

    [[nodiscard]] pos_t better_block(pos_t a, pos_t b) const {
        // b is to the right of a; ties go right.
        return block_min_.get(b) <= block_min_.get(a) ? b : a;
    }

    [[nodiscard]] pos_t min_block(pos_t l, pos_t r) const {
        const auto level = static_cast<unsigned>(std::bit_width(r - l + 1) - 1);
        return better_block(table_at(level, l), table_at(level, r - (pos_t{1} << level) + 1));
    }

    [[nodiscard]] Extremum range_min(pos_t lo, pos_t hi) const {
        const pos_t bl = lo / kBlockBits;
        const pos_t bh = hi / kBlockBits;
        if (bl == bh) return scan(lo, hi);
        Extremum best = scan(lo, (bl + 1) * kBlockBits - 1);
        if (bh > bl + 1) {
            const pos_t blk = min_block(bl + 1, bh - 1);
            if (static_cast<long long>(block_min_.get(blk)) <= best.value) best = scan_block(blk);
        }
        const Extremum tail = scan(bh * kBlockBits, hi);
        if (tail.value <= best.value) best = tail;
        return best;
    }

    void build_block_tables() {
        const pos_t nb = block_count();
        block_min_ = IntVector(nb, IntVector::width_for(n_ + 1));
        for (pos_t b = 0; b < nb; ++b) block_min_.set(b, static_cast<std::uint64_t>(scan_block(b).value));
        table_.clear();
        const unsigned width = IntVector::width_for(nb - 1);
        for (unsigned level = 1; (pos_t{1} << level) <= nb; ++level) {
            const pos_t half = pos_t{1} << (level - 1);
            const pos_t count = nb - (pos_t{1} << level) + 1;
            IntVector next(count, width);
            for (pos_t b = 0; b < count; ++b) next.set(b, better_block(table_at(level - 1, b), table_at(level - 1, b + half)));
            table_.push_back(std::move(next));
        }
    }

    BitVector bp_;
    IntVector block_min_;
    std::vector<IntVector> table_;
    pos_t n_ = 0;
    RangeMode mode_ = RangeMode::Min;
};

}  // namespace sus
