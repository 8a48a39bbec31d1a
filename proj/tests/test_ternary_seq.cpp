#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <sus/ternary_seq.hpp>

using sus::nil;
using sus::pos_t;
using sus::TernarySeq;

namespace {

pos_t scan_rank(const std::vector<int>& s, int c, pos_t i) {
    pos_t r = 0;
    for (pos_t k = 0; k < i; ++k) r += s[k] == c;
    return r;
}

pos_t scan_select(const std::vector<int>& s, int c, pos_t k) {
    if (k == 0) return nil;
    for (pos_t i = 0; i < s.size(); ++i) {
        if (s[i] == c && --k == 0) return i + 1;
    }
    return nil;
}

}  // namespace

TEST(TernarySeq, LengthDiffOfAba) {
    const auto seq = TernarySeq::build(std::vector<int>{0, -1, 1});
    EXPECT_EQ(seq.rank(1, 3), 1U);
    EXPECT_EQ(seq.select(-1, 1), 2U);
    EXPECT_EQ(seq[3], 1);
    EXPECT_EQ(seq.select(-1, 2), nil);
}

TEST(TernarySeq, AllZero) {
    const auto seq = TernarySeq::build(std::vector<int>(6, 0));
    EXPECT_EQ(seq.rank(-1, 6), 0U);
    EXPECT_EQ(seq.rank(1, 6), 0U);
    EXPECT_EQ(seq.rank(0, 6), 6U);
    EXPECT_EQ(seq.select(1, 1), nil);
    EXPECT_EQ(seq.select(0, 6), 6U);
}

TEST(TernarySeq, Errors) {
    EXPECT_THROW(TernarySeq::build(std::vector<int>{0, 2}), std::invalid_argument);
    EXPECT_THROW(TernarySeq::build(std::vector<int>{}), std::invalid_argument);
    const auto seq = TernarySeq::build(std::vector<int>{0, 1});
    EXPECT_THROW((void)seq.rank(2, 1), std::invalid_argument);
    EXPECT_THROW((void)seq.rank(1, 3), std::out_of_range);
}

TEST(TernarySeq, ExhaustiveUpToLengthEight) {
    for (pos_t len = 1; len <= 8; ++len) {
        pos_t total = 1;
        for (pos_t i = 0; i < len; ++i) total *= 3;
        for (pos_t code = 0; code < total; ++code) {
            std::vector<int> s(len);
            pos_t c = code;
            for (auto& v : s) {
                v = static_cast<int>(c % 3) - 1;
                c /= 3;
            }
            const auto seq = TernarySeq::build(s);
            for (pos_t i = 1; i <= len; ++i) {
                ASSERT_EQ(seq[i], s[i - 1]);
                ASSERT_EQ(seq.rank(-1, i) + seq.rank(0, i) + seq.rank(1, i), i);
                for (int sym : {-1, 0, 1}) ASSERT_EQ(seq.rank(sym, i), scan_rank(s, sym, i));
            }
            for (int sym : {-1, 0, 1}) {
                for (pos_t k = 0; k <= len + 1; ++k) ASSERT_EQ(seq.select(sym, k), scan_select(s, sym, k));
            }
        }
    }
}

TEST(TernarySeq, RandomLargeAgreesWithLinearScan) {
    std::mt19937_64 rng(21);
    const pos_t len = 100000;
    std::vector<int> s(len);
    std::vector<std::vector<pos_t>> where(3);
    std::vector<std::vector<pos_t>> prefix(3, std::vector<pos_t>(len + 1, 0));
    for (pos_t i = 0; i < len; ++i) {
        // skewed toward 0 like a real LENGTH_DIFF
        const auto r = rng() % 10;
        s[i] = r < 6 ? 0 : (r < 8 ? -1 : 1);
        for (int c = 0; c < 3; ++c) prefix[c][i + 1] = prefix[c][i] + (s[i] == c - 1);
        where[s[i] + 1].push_back(i + 1);
    }
    const auto seq = TernarySeq::build(s);
    for (int q = 0; q < 10000; ++q) {
        const pos_t i = 1 + rng() % len;
        for (int c = -1; c <= 1; ++c) {
            ASSERT_EQ(seq.rank(c, i), prefix[c + 1][i]);
            const auto& w = where[c + 1];
            const pos_t k = 1 + rng() % (w.size() + 1);
            ASSERT_EQ(seq.select(c, k), k <= w.size() ? w[k - 1] : nil);
        }
    }
    EXPECT_LE(seq.total_bits(), 2 * len + len / 2);
}
