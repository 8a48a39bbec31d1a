#pragma once

#include <optional>
#include <ranges>
#include <stdexcept>
#include <vector>

#include "bit_vector.hpp"

namespace sus {

/// Immutable sequence over {-1, 0, +1} with constant-time rank/select per symbol.
///
/// Stored as a two-level code: `nonzero_` marks positions holding +-1 and
/// `sign_` (indexed by nonzero ordinal) marks which of them are +1. This is
/// the Huffman-shaped wavelet tree for the code {0 -> "0", -1 -> "10", +1 -> "11"}
/// and occupies n + (#nonzero) bits before directories.
class TernarySeq {
   public:
    TernarySeq() = default;

    template <std::ranges::input_range R>
    static TernarySeq build(R&& symbols) {
        std::vector<std::uint64_t> nz_words;
        std::vector<std::uint64_t> sign_words;
        pos_t len = 0;
        pos_t nnz = 0;
        for (auto&& s : symbols) {
            const auto v = static_cast<long long>(s);
            if (v < -1 || v > 1) throw std::invalid_argument("symbol outside {-1,0,+1}");
            if (len % 64 == 0) nz_words.push_back(0);
            if (v != 0) {
                nz_words.back() |= std::uint64_t{1} << (len % 64);
                if (nnz % 64 == 0) sign_words.push_back(0);
                if (v > 0) sign_words.back() |= std::uint64_t{1} << (nnz % 64);
                ++nnz;
            }
            ++len;
        }
        if (len == 0) throw std::invalid_argument("empty sequence");
        TernarySeq seq;
        seq.nonzero_ = BitVector(std::move(nz_words), len);
        if (nnz > 0) seq.sign_ = BitVector(std::move(sign_words), nnz);
        return seq;
    }

    [[nodiscard]] pos_t size() const noexcept { return nonzero_.size(); }

    [[nodiscard]] int operator[](pos_t i) const {
        if (!nonzero_[i]) return 0;
        return (*sign_)[nonzero_.rank1(i)] ? 1 : -1;
    }

    /// Occurrences of c in [1, i].
    [[nodiscard]] pos_t rank(int c, pos_t i) const {
        check_symbol(c);
        const pos_t nz = nonzero_.rank1(i);
        if (c == 0) return i - nz;
        if (!sign_) return 0;
        const pos_t plus = sign_->rank1(nz);
        return c > 0 ? plus : nz - plus;
    }

    /// Position of the k-th c, or nil.
    [[nodiscard]] pos_t select(int c, pos_t k) const {
        check_symbol(c);
        if (c == 0) return nonzero_.select0(k);
        if (!sign_) return nil;
        const pos_t j = sign_->select(c > 0, k);
        return j == nil ? nil : nonzero_.select1(j);
    }

    [[nodiscard]] std::uint64_t payload_bits() const noexcept {
        return nonzero_.payload_bits() + (sign_ ? sign_->payload_bits() : 0);
    }
    [[nodiscard]] std::uint64_t aux_bits() const noexcept {
        return nonzero_.aux_bits() + (sign_ ? sign_->aux_bits() : 0);
    }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return payload_bits() + aux_bits(); }

    void serialize(io::ByteWriter& out) const {
        nonzero_.serialize(out);
        out.put_u8(sign_ ? 1 : 0);
        if (sign_) sign_->serialize(out);
    }

    static TernarySeq deserialize(io::ByteReader& in) {
        TernarySeq seq;
        seq.nonzero_ = BitVector::deserialize(in);
        if (in.get_u8() != 0) seq.sign_ = BitVector::deserialize(in);
        const pos_t expected = seq.nonzero_.ones();
        if ((seq.sign_ ? seq.sign_->size() : 0) != expected) throw io::format_error("ternary sign vector mismatch");
        return seq;
    }

   private:
    static void check_symbol(int c) {
        if (c < -1 || c > 1) throw std::invalid_argument("symbol outside {-1,0,+1}");
    }

    BitVector nonzero_;
    std::optional<BitVector> sign_;
};

}  // namespace sus
