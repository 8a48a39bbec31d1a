#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sus::io {

/// Thrown for truncated or malformed serialized data.
class format_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Appends little-endian integers to a byte buffer.
class ByteWriter {
   public:
    void put_u8(std::uint8_t v) { buf_.push_back(v); }

    void put_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    void put_words(std::span<const std::uint64_t> words) {
        put_u64(words.size());
        for (auto w : words) put_u64(w);
    }

    void put_bytes(std::span<const std::uint8_t> bytes) { buf_.insert(buf_.end(), bytes.begin(), bytes.end()); }

    void put_tag(std::string_view tag) {
        std::uint8_t raw[8] = {};
        std::memcpy(raw, tag.data(), std::min<std::size_t>(tag.size(), 8));
        put_bytes(raw);
    }

    [[nodiscard]] std::size_t size() const noexcept { return buf_.size(); }
    [[nodiscard]] const std::vector<std::uint8_t>& bytes() const noexcept { return buf_; }
    std::vector<std::uint8_t> take() && { return std::move(buf_); }

   private:
    std::vector<std::uint8_t> buf_;
};

class ByteReader {
   public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint64_t get_u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t{data_[pos_ + i]} << (8 * i);
        pos_ += 8;
        return v;
    }

    std::vector<std::uint64_t> get_words() {
        const auto count = get_u64();
        if (count > remaining() / 8) throw format_error("word array length exceeds available data");
        std::vector<std::uint64_t> words(count);
        for (auto& w : words) w = get_u64();
        return words;
    }

    std::span<const std::uint8_t> get_bytes(std::size_t count) {
        need(count);
        auto out = data_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    std::string get_tag() {
        auto raw = get_bytes(8);
        std::string tag(reinterpret_cast<const char*>(raw.data()), 8);
        tag.erase(tag.find_last_not_of('\0') + 1);
        return tag;
    }

    [[nodiscard]] std::size_t remaining() const noexcept { return data_.size() - pos_; }
    [[nodiscard]] std::size_t offset() const noexcept { return pos_; }

   private:
    void need(std::size_t count) const {
        if (remaining() < count) throw format_error("unexpected end of data");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

/// 64-bit FNV-1a. Any single corrupted byte changes the digest.
inline std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace sus::io
