#pragma once

#include <bit>
#include <cstdint>
#include <ranges>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "common.hpp"
#include "io.hpp"

namespace sus {

namespace detail {

/// Position (0..63) of the r-th set bit of w, r is 1-based and r <= popcount(w).
inline unsigned select_in_word(std::uint64_t w, unsigned r) noexcept {
    unsigned base = 0;
    for (;;) {
        const unsigned c = std::popcount(w & 0xffU);
        if (r <= c) break;
        r -= c;
        w >>= 8;
        base += 8;
    }
    for (;;) {
        if (w & 1U) {
            if (--r == 0) return base;
        }
        w >>= 1;
        ++base;
    }
}

inline std::uint64_t low_mask(unsigned bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace detail

/// Immutable bit array with constant-time rank and sampled select.
///
/// Positions are 1-based. rank(c, i) counts occurrences of c in [1, i];
/// select(c, k) returns the position of the k-th c, or nil.
///
/// Rank directory: one absolute count per 512-bit superblock plus seven packed
/// 9-bit word counts (128 bits per 512). Select: the superblock of every
/// 1024-th occurrence is sampled, the rest is a bounded binary search over the
/// rank directory and a word scan.
class BitVector {
   public:
    static constexpr pos_t kSuperblockBits = 512;
    static constexpr pos_t kSelectSample = 1024;

    BitVector() = default;

    /// Takes ownership of packed words (bit i-1 of the sequence is bit (i-1)%64 of word (i-1)/64).
    BitVector(std::vector<std::uint64_t> words, pos_t len) : words_(std::move(words)), len_(len) {
        if (len_ == 0) throw std::invalid_argument("empty sequence");
        if (words_.size() != (len_ + 63) / 64) throw std::invalid_argument("word count does not match bit length");
        if (len_ % 64 != 0) words_.back() &= detail::low_mask(static_cast<unsigned>(len_ % 64));
        build_directories();
    }

    /// Builds from any range of 0/1 values.
    template <std::ranges::input_range R>
    static BitVector from_bits(R&& bits) {
        std::vector<std::uint64_t> words;
        pos_t len = 0;
        for (auto&& b : bits) {
            const auto v = static_cast<long long>(b);
            if (v != 0 && v != 1) throw std::invalid_argument("bit value outside {0,1}");
            if (len % 64 == 0) words.push_back(0);
            if (v) words.back() |= std::uint64_t{1} << (len % 64);
            ++len;
        }
        return BitVector(std::move(words), len);
    }

    [[nodiscard]] pos_t size() const noexcept { return len_; }
    [[nodiscard]] pos_t ones() const noexcept { return ones_; }
    [[nodiscard]] pos_t zeros() const noexcept { return len_ - ones_; }

    [[nodiscard]] bool operator[](pos_t i) const {
        check_position(i, 1, len_, "BitVector::access");
        return get0(i - 1);
    }

    [[nodiscard]] pos_t rank1(pos_t i) const {
        check_position(i, 0, len_, "BitVector::rank");
        return rank1_prefix(i);
    }
    [[nodiscard]] pos_t rank0(pos_t i) const { return i - rank1(i); }
    [[nodiscard]] pos_t rank(bool c, pos_t i) const { return c ? rank1(i) : rank0(i); }

    [[nodiscard]] pos_t select1(pos_t k) const {
        if (k == 0 || k > ones_) return nil;
        return select_impl<true>(k);
    }
    [[nodiscard]] pos_t select0(pos_t k) const {
        if (k == 0 || k > zeros()) return nil;
        return select_impl<false>(k);
    }
    [[nodiscard]] pos_t select(bool c, pos_t k) const { return c ? select1(k) : select0(k); }

    /// Largest i <= d with bit i set, or nil.
    [[nodiscard]] pos_t pred1(pos_t d) const {
        check_position(d, 1, len_, "BitVector::pred");
        const pos_t r = rank1_prefix(d);
        return r == 0 ? nil : select_impl<true>(r);
    }

    /// Smallest i >= d with bit i set, or nil.
    [[nodiscard]] pos_t succ1(pos_t d) const {
        check_position(d, 1, len_, "BitVector::succ");
        if (get0(d - 1)) return d;
        const pos_t r = rank1_prefix(d);
        return r == ones_ ? nil : select_impl<true>(r + 1);
    }

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    [[nodiscard]] std::uint64_t payload_bits() const noexcept { return len_; }
    [[nodiscard]] std::uint64_t aux_bits() const noexcept {
        return 64 * (rank_dir_.size() + select1_samples_.size() + select0_samples_.size());
    }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return payload_bits() + aux_bits(); }

    void serialize(io::ByteWriter& out) const {
        out.put_u64(len_);
        out.put_words(words_);
    }

    static BitVector deserialize(io::ByteReader& in) {
        const auto len = in.get_u64();
        auto words = in.get_words();
        if (len == 0 || words.size() != (len + 63) / 64) throw io::format_error("bit vector length mismatch");
        return BitVector(std::move(words), len);
    }

    friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }

   private:
    [[nodiscard]] bool get0(pos_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }

    [[nodiscard]] pos_t superblocks() const noexcept { return (len_ + kSuperblockBits - 1) / kSuperblockBits; }

    [[nodiscard]] pos_t ones_before(pos_t sb) const noexcept { return rank_dir_[2 * sb]; }

    [[nodiscard]] pos_t word_rel(pos_t sb, unsigned w) const noexcept {
        return w == 0 ? 0 : (rank_dir_[2 * sb + 1] >> (9 * (w - 1))) & 0x1ffU;
    }

    // Ones in the first i bits (0-based prefix length).
    [[nodiscard]] pos_t rank1_prefix(pos_t i) const noexcept {
        const pos_t sb = i / kSuperblockBits;
        const pos_t word = i / 64;
        pos_t r = ones_before(sb) + word_rel(sb, static_cast<unsigned>(word % 8));
        if (i % 64 != 0) r += std::popcount(words_[word] & detail::low_mask(static_cast<unsigned>(i % 64)));
        return r;
    }

    template <bool One>
    [[nodiscard]] pos_t count_before(pos_t sb) const noexcept {
        return One ? ones_before(sb) : sb * kSuperblockBits - ones_before(sb);
    }

    template <bool One>
    [[nodiscard]] pos_t select_impl(pos_t k) const noexcept {
        const auto& samples = One ? select1_samples_ : select0_samples_;
        const pos_t j = (k - 1) / kSelectSample;
        pos_t lo = samples[j];
        pos_t hi = j + 1 < samples.size() ? samples[j + 1] : superblocks() - 1;
        // largest superblock sb in [lo, hi] with count_before(sb) < k
        while (lo < hi) {
            const pos_t mid = lo + (hi - lo + 1) / 2;
            if (count_before<One>(mid) < k) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        const pos_t sb = lo;
        pos_t r = k - count_before<One>(sb);
        unsigned w = 7;
        while (w > 0) {
            const pos_t rel = One ? word_rel(sb, w) : 64 * w - word_rel(sb, w);
            if (rel < r) break;
            --w;
        }
        r -= One ? word_rel(sb, w) : 64 * w - word_rel(sb, w);
        const pos_t word = sb * 8 + w;
        const std::uint64_t bits = One ? words_[word] : ~words_[word];
        return word * 64 + detail::select_in_word(bits, static_cast<unsigned>(r)) + 1;
    }

    void build_directories() {
        const pos_t nsb = superblocks();
        rank_dir_.assign(2 * (nsb + 1), 0);
        select1_samples_.clear();
        select0_samples_.clear();
        pos_t total = 0;
        for (pos_t sb = 0; sb < nsb; ++sb) {
            rank_dir_[2 * sb] = total;
            std::uint64_t packed = 0;
            pos_t rel = 0;
            for (unsigned w = 0; w < 8; ++w) {
                const pos_t word = sb * 8 + w;
                if (w > 0) packed |= rel << (9 * (w - 1));
                if (word < words_.size()) rel += std::popcount(words_[word]);
            }
            rank_dir_[2 * sb + 1] = packed;
            // sample the superblock of occurrence number j*kSelectSample + 1
            const pos_t zeros_before = sb * kSuperblockBits - total;
            const pos_t zeros_here = std::min(kSuperblockBits, len_ - sb * kSuperblockBits) - rel;
            while (select1_samples_.size() * kSelectSample + 1 <= total + rel) select1_samples_.push_back(sb);
            while (select0_samples_.size() * kSelectSample + 1 <= zeros_before + zeros_here)
                select0_samples_.push_back(sb);
            total += rel;
        }
        rank_dir_[2 * nsb] = total;
        ones_ = total;
    }

    std::vector<std::uint64_t> words_;
    pos_t len_ = 0;
    pos_t ones_ = 0;
    std::vector<std::uint64_t> rank_dir_;
    std::vector<std::uint64_t> select1_samples_;
    std::vector<std::uint64_t> select0_samples_;
};

/// Mutable staging area for a BitVector of fixed length.
class BitBuilder {
   public:
    explicit BitBuilder(pos_t len) : words_((len + 63) / 64, 0), len_(len) {}

    void set(pos_t i, bool value = true) {
        check_position(i, 1, len_, "BitBuilder::set");
        const auto mask = std::uint64_t{1} << ((i - 1) % 64);
        if (value) {
            words_[(i - 1) / 64] |= mask;
        } else {
            words_[(i - 1) / 64] &= ~mask;
        }
    }

    [[nodiscard]] bool get(pos_t i) const {
        check_position(i, 1, len_, "BitBuilder::get");
        return (words_[(i - 1) / 64] >> ((i - 1) % 64)) & 1U;
    }

    [[nodiscard]] pos_t size() const noexcept { return len_; }
    [[nodiscard]] std::uint64_t bits() const noexcept { return 64 * words_.size(); }

    BitVector build() && { return BitVector(std::move(words_), len_); }

   private:
    std::vector<std::uint64_t> words_;
    pos_t len_;
};

}  // namespace sus
