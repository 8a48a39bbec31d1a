#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bit_vector.hpp"

namespace sus {

/// A text over an integer alphabet. Positions are 1-based.
class Text {
   public:
    using symbol_type = std::uint32_t;

    Text() = default;

    explicit Text(std::vector<symbol_type> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw std::invalid_argument("empty text");
        auto sorted = symbols_;
        std::sort(sorted.begin(), sorted.end());
        sigma_ = static_cast<pos_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    /// Bytes are the alphabet.
    static Text from_bytes(std::string_view bytes) {
        std::vector<symbol_type> symbols(bytes.size());
        std::transform(bytes.begin(), bytes.end(), symbols.begin(),
                       [](char c) { return static_cast<symbol_type>(static_cast<unsigned char>(c)); });
        return Text(std::move(symbols));
    }

    [[nodiscard]] pos_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] pos_t sigma() const noexcept { return sigma_; }

    /// 1-based access.
    [[nodiscard]] symbol_type operator[](pos_t i) const noexcept { return symbols_[i - 1]; }

    [[nodiscard]] std::span<const symbol_type> symbols() const noexcept { return symbols_; }

    [[nodiscard]] std::uint64_t bits() const noexcept { return 32 * symbols_.capacity(); }

   private:
    std::vector<symbol_type> symbols_;
    pos_t sigma_ = 0;
};

/// Plain construction-time arrays. Every array is 1-based (index 0 unused);
/// lcp has entries 1..n+1.
struct SuffixContext {
    pos_t n = 0;
    std::vector<pos_t> sa;
    std::vector<pos_t> isa;
    std::vector<pos_t> lcp;
    std::vector<pos_t> plcp;
    std::vector<pos_t> rank_prev;  // Phi; nil at sa[1]
    std::vector<pos_t> rank_next;  // nil at sa[n]

    [[nodiscard]] std::uint64_t bits() const noexcept {
        return 64 * (sa.capacity() + isa.capacity() + lcp.capacity() + plcp.capacity() + rank_prev.capacity() +
                     rank_next.capacity());
    }
};

namespace detail {

/// Prefix doubling with counting sorts. Returns a 0-based suffix array.
inline std::vector<pos_t> prefix_doubling_sa(std::span<const Text::symbol_type> text) {
    const std::size_t n = text.size();
    std::vector<pos_t> sa(n);
    std::vector<pos_t> rank(n);
    std::vector<pos_t> tmp(n);

    // initial ranks: dense symbol ranks
    {
        std::vector<Text::symbol_type> alphabet(text.begin(), text.end());
        std::sort(alphabet.begin(), alphabet.end());
        alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
        for (std::size_t i = 0; i < n; ++i) {
            rank[i] = static_cast<pos_t>(std::lower_bound(alphabet.begin(), alphabet.end(), text[i]) - alphabet.begin());
        }
    }
    pos_t classes = *std::max_element(rank.begin(), rank.end()) + 1;

    std::vector<pos_t> count;
    auto counting_sort_by_rank = [&](const std::vector<pos_t>& order, std::vector<pos_t>& out) {
        count.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[rank[i] + 1];
        for (pos_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
        for (auto p : order) out[count[rank[p]]++] = p;
    };

    std::vector<pos_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    counting_sort_by_rank(order, sa);

    for (std::size_t k = 1; classes < n; k *= 2) {
        // order by second key: suffixes without a k-successor come first
        std::size_t pos = 0;
        for (std::size_t i = n - std::min(k, n); i < n; ++i) order[pos++] = i;
        for (std::size_t r = 0; r < n; ++r) {
            if (sa[r] >= k) order[pos++] = sa[r] - k;
        }
        counting_sort_by_rank(order, sa);

        auto second = [&](pos_t p) -> long long { return p + k < n ? static_cast<long long>(rank[p + k]) : -1; };
        tmp[sa[0]] = 0;
        pos_t c = 0;
        for (std::size_t r = 1; r < n; ++r) {
            const pos_t a = sa[r - 1];
            const pos_t b = sa[r];
            if (rank[a] != rank[b] || second(a) != second(b)) ++c;
            tmp[b] = c;
        }
        rank.swap(tmp);
        classes = c + 1;
    }
    return sa;
}

}  // namespace detail

/// Suffix array, inverse, Phi/RankNext, PLCP (via Phi) and LCP.
inline SuffixContext build_suffix_context(const Text& text) {
    const pos_t n = text.size();
    if (n == 0) throw std::invalid_argument("empty text");
    SuffixContext ctx;
    ctx.n = n;
    const auto sa0 = detail::prefix_doubling_sa(text.symbols());

    ctx.sa.assign(n + 1, nil);
    ctx.isa.assign(n + 1, nil);
    for (pos_t r = 1; r <= n; ++r) {
        ctx.sa[r] = sa0[r - 1] + 1;
        ctx.isa[ctx.sa[r]] = r;
    }

    ctx.rank_prev.assign(n + 1, nil);
    ctx.rank_next.assign(n + 1, nil);
    for (pos_t r = 1; r <= n; ++r) {
        if (r > 1) ctx.rank_prev[ctx.sa[r]] = ctx.sa[r - 1];
        if (r < n) ctx.rank_next[ctx.sa[r]] = ctx.sa[r + 1];
    }

    // PLCP[i+1] >= PLCP[i] - 1 lets the match length carry over.
    ctx.plcp.assign(n + 1, 0);
    pos_t h = 0;
    for (pos_t i = 1; i <= n; ++i) {
        const pos_t j = ctx.rank_prev[i];
        if (j == nil) {
            h = 0;
            ctx.plcp[i] = 0;
            continue;
        }
        while (i + h <= n && j + h <= n && text[i + h] == text[j + h]) ++h;
        ctx.plcp[i] = h;
        if (h > 0) --h;
    }

    ctx.lcp.assign(n + 2, 0);
    for (pos_t i = 1; i <= n; ++i) ctx.lcp[ctx.isa[i]] = ctx.plcp[i];
    ctx.lcp[n + 1] = 0;
    return ctx;
}

/// PLCP in 2n bits: the i-th set bit sits at position 2i + PLCP[i].
class SuccinctPlcp {
   public:
    SuccinctPlcp() = default;

    static SuccinctPlcp build(std::span<const pos_t> plcp_one_based, pos_t n) {
        BitBuilder bits(2 * n);
        for (pos_t i = 1; i <= n; ++i) bits.set(2 * i + plcp_one_based[i]);
        SuccinctPlcp out;
        out.n_ = n;
        out.bits_ = std::move(bits).build();
        return out;
    }

    static SuccinctPlcp build(const SuffixContext& ctx) { return build(ctx.plcp, ctx.n); }

    [[nodiscard]] pos_t operator[](pos_t i) const {
        check_position(i, 1, n_, "SuccinctPlcp::access");
        return bits_.select1(i) - 2 * i;
    }

    [[nodiscard]] pos_t size() const noexcept { return n_; }
    [[nodiscard]] const BitVector& bits() const noexcept { return bits_; }
    [[nodiscard]] std::uint64_t total_bits() const noexcept { return bits_.total_bits(); }

    void serialize(io::ByteWriter& out) const {
        out.put_u64(n_);
        bits_.serialize(out);
    }

    static SuccinctPlcp deserialize(io::ByteReader& in) {
        SuccinctPlcp out;
        out.n_ = in.get_u64();
        out.bits_ = BitVector::deserialize(in);
        if (out.bits_.size() != 2 * out.n_ || out.bits_.ones() != out.n_) throw io::format_error("PLCP bit count mismatch");
        return out;
    }

   private:
    BitVector bits_;
    pos_t n_ = 0;
};

}  // namespace sus
