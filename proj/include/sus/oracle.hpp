#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mus.hpp"
#include "suffix_arrays.hpp"

namespace sus::oracle {

inline constexpr pos_t kDefaultSizeCap = 512;

/// SUS_ORACLE_CAP overrides the default size cap.
inline pos_t size_cap_from_env() {
    if (const char* env = std::getenv("SUS_ORACLE_CAP")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultSizeCap;
}

/// True iff T[i..j] occurs exactly once, by scanning every alignment.
inline bool is_unique(const Text& t, pos_t i, pos_t j) {
    if (i < 1 || i > j || j > t.size()) throw std::out_of_range("invalid interval");
    const pos_t len = j - i + 1;
    pos_t occ = 0;
    for (pos_t a = 1; a + len - 1 <= t.size(); ++a) {
        pos_t k = 0;
        while (k < len && t[a + k] == t[i + k]) ++k;
        if (k == len && ++occ > 1) return false;
    }
    return occ == 1;
}

/// Exhaustive answers for one text. Quadratic tables; O(n) per interval query.
class Report {
   public:
    explicit Report(const Text& t, pos_t cap = kDefaultSizeCap) : n_(t.size()) {
        if (n_ > cap) {
            throw std::length_error("text length " + std::to_string(n_) + " exceeds oracle cap " + std::to_string(cap));
        }
        // longest_repeat_[i]: max over j != i of the common prefix of suffixes i and j
        longest_repeat_.assign(n_ + 2, 0);
        std::vector<pos_t> row(n_ + 2, 0), next_row(n_ + 2, 0);
        for (pos_t i = n_; i >= 1; --i) {
            for (pos_t j = n_; j >= 1; --j) {
                row[j] = t[i] == t[j] ? next_row[j + 1] + 1 : 0;
                if (j != i) {
                    longest_repeat_[i] = std::max(longest_repeat_[i], row[j]);
                    longest_repeat_[j] = std::max(longest_repeat_[j], row[j]);
                }
            }
            std::swap(row, next_row);
        }

        for (pos_t i = 1; i <= n_; ++i) {
            for (pos_t j = i; j <= n_; ++j) {
                if (!unique(i, j)) continue;
                const bool minimal = (i == j) || (!unique(i + 1, j) && !unique(i, j - 1));
                if (minimal) mus_.push_back({i, j});
                break;  // longer intervals from i are unique but not minimal
            }
        }
        std::sort(mus_.begin(), mus_.end());

        length_.assign(n_ + 1, 0);
        for (pos_t p = 1; p <= n_; ++p) length_[p] = shortest_cover_length(p, p);

        for (const auto& m : mus_) {
            for (pos_t p = 1; p <= n_; ++p) {
                if (cover(m, {p, p}).length() == length_[p]) {
                    meaningful_.push_back(m);
                    break;
                }
            }
        }
    }

    [[nodiscard]] pos_t size() const noexcept { return n_; }

    /// T[i..j] is unique iff it is longer than the longest repeat starting at i.
    [[nodiscard]] bool unique(pos_t i, pos_t j) const noexcept { return j - i + 1 > longest_repeat_[i]; }

    [[nodiscard]] const std::vector<Interval>& mus() const noexcept { return mus_; }
    [[nodiscard]] const std::vector<Interval>& meaningful_mus() const noexcept { return meaningful_; }

    /// LENGTH[p], 1-based; entry 0 unused.
    [[nodiscard]] const std::vector<pos_t>& lengths() const noexcept { return length_; }

    /// Every shortest unique interval containing [s, t], sorted by start.
    [[nodiscard]] std::vector<Interval> sus(pos_t s, pos_t t) const {
        const pos_t best = shortest_cover_length(s, t);
        std::vector<Interval> out;
        for (pos_t i = 1; i <= s; ++i) {
            const pos_t j = i + best - 1;
            if (j < t || j > n_) continue;
            if (unique(i, j)) out.push_back({i, j});
        }
        return out;
    }

    [[nodiscard]] std::vector<Interval> sus(pos_t p) const { return sus(p, p); }

   private:
    [[nodiscard]] pos_t shortest_cover_length(pos_t s, pos_t t) const {
        pos_t best = std::numeric_limits<pos_t>::max();
        for (pos_t i = 1; i <= s; ++i) {
            const pos_t len = std::max(longest_repeat_[i] + 1, t - i + 1);
            if (i + len - 1 <= n_) best = std::min(best, len);
        }
        return best;
    }

    pos_t n_;
    std::vector<pos_t> longest_repeat_;
    std::vector<Interval> mus_;
    std::vector<Interval> meaningful_;
    std::vector<pos_t> length_;
};

}  // namespace sus::oracle
