#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sus {

/// Fixed-width packed unsigned integers, 0-based.
class IntVector {
   public:
    IntVector() = default;

    IntVector(std::size_t size, unsigned width) : size_(size), width_(width) {
        if (width_ == 0 || width_ > 64) throw std::invalid_argument("IntVector width must be in [1, 64]");
        data_.assign((size_ * width_ + 63) / 64 + 1, 0);
    }

    /// Smallest width able to hold max_value.
    static unsigned width_for(std::uint64_t max_value) noexcept {
        return max_value == 0 ? 1 : static_cast<unsigned>(std::bit_width(max_value));
    }

    [[nodiscard]] std::uint64_t get(std::size_t i) const noexcept {
        const std::size_t bit = i * width_;
        const std::size_t w = bit / 64;
        const unsigned off = bit % 64;
        std::uint64_t v = data_[w] >> off;
        if (off + width_ > 64) v |= data_[w + 1] << (64 - off);
        return width_ == 64 ? v : v & ((std::uint64_t{1} << width_) - 1);
    }

    void set(std::size_t i, std::uint64_t v) noexcept {
        const std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
        v &= mask;
        const std::size_t bit = i * width_;
        const std::size_t w = bit / 64;
        const unsigned off = bit % 64;
        data_[w] = (data_[w] & ~(mask << off)) | (v << off);
        if (off + width_ > 64) {
            const unsigned spill = off + width_ - 64;
            const std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
            data_[w + 1] = (data_[w + 1] & ~hi_mask) | (v >> (64 - off));
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] unsigned width() const noexcept { return width_; }
    [[nodiscard]] std::uint64_t bits() const noexcept { return 64 * data_.size(); }

   private:
    std::vector<std::uint64_t> data_;
    std::size_t size_ = 0;
    unsigned width_ = 1;
};

}  // namespace sus
