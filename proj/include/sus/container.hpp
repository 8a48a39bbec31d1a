#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interval_sus.hpp"
#include "io.hpp"
#include "mus.hpp"
#include "pipeline.hpp"
#include "point_sus.hpp"
#include "range_query.hpp"

namespace sus {

/// Flat index file:
///
///   magic "SUSIDX01" | text length u64 | flags u64 |
///   { tag[8] | payload length u64 | payload }* | FNV-1a-64 of all preceding bytes
///
/// Integers are little-endian. Sections appear in the order MUSIX, IVSUS, PTSUS.
/// Rank/select and range directories are rebuilt on load, not stored.
struct IndexContainer {
    static constexpr std::string_view kMagic = "SUSIDX01";
    static constexpr std::uint64_t kHasMus = 1;
    static constexpr std::uint64_t kHasInterval = 2;
    static constexpr std::uint64_t kHasPoint = 4;

    pos_t text_length = 0;
    std::optional<MusIndex> mus;
    std::optional<RangeQuery> rmq;
    std::optional<PointSusIndex> point;

    static IndexContainer from(const BuiltIndexes& built) {
        IndexContainer c;
        c.text_length = built.mus().text_length();
        c.mus = built.mus();
        if (built.interval) c.rmq = built.interval->rmq();
        c.point = built.point;
        return c;
    }

    [[nodiscard]] std::uint64_t flags() const noexcept {
        return (mus ? kHasMus : 0) | (rmq ? kHasInterval : 0) | (point ? kHasPoint : 0);
    }

    [[nodiscard]] bool has_interval() const noexcept { return mus.has_value() && rmq.has_value(); }
    [[nodiscard]] bool has_point() const noexcept { return point.has_value(); }

    [[nodiscard]] IntervalSusIndex interval_index() const {
        if (!has_interval()) throw std::logic_error("container has no interval index");
        return IntervalSusIndex(*mus, *rmq);
    }

    [[nodiscard]] std::vector<std::uint8_t> encode() const {
        io::ByteWriter out;
        out.put_tag(kMagic);
        out.put_u64(text_length);
        out.put_u64(flags());
        auto section = [&out](std::string_view tag, auto&& write) {
            io::ByteWriter body;
            write(body);
            out.put_tag(tag);
            out.put_u64(body.size());
            out.put_bytes(body.bytes());
        };
        if (mus) section("MUSIX", [&](io::ByteWriter& w) { mus->serialize(w); });
        if (rmq) section("IVSUS", [&](io::ByteWriter& w) { rmq->serialize(w); });
        if (point) section("PTSUS", [&](io::ByteWriter& w) { point->serialize(w); });
        out.put_u64(io::fnv1a64(out.bytes()));
        return std::move(out).take();
    }

    static IndexContainer decode(std::span<const std::uint8_t> bytes) {
        if (bytes.size() < 32) throw io::format_error("index file too short");
        const auto body = bytes.first(bytes.size() - 8);
        io::ByteReader tail(bytes.last(8));
        if (tail.get_u64() != io::fnv1a64(body)) throw io::format_error("index checksum mismatch");

        io::ByteReader in(body);
        if (in.get_tag() != kMagic) throw io::format_error("bad magic");
        IndexContainer c;
        c.text_length = in.get_u64();
        const auto flags = in.get_u64();
        if ((flags & ~(kHasMus | kHasInterval | kHasPoint)) != 0) throw io::format_error("unknown section flags");

        std::string last_tag;
        while (in.remaining() > 0) {
            const auto tag = in.get_tag();
            const auto len = in.get_u64();
            io::ByteReader section(in.get_bytes(len));
            if (tag == "MUSIX" && !c.mus && !c.rmq && !c.point) {
                c.mus = MusIndex::deserialize(section);
            } else if (tag == "IVSUS" && !c.rmq && !c.point) {
                c.rmq = RangeQuery::deserialize(section);
            } else if (tag == "PTSUS" && !c.point) {
                c.point = PointSusIndex::deserialize(section);
            } else {
                throw io::format_error("unexpected section '" + tag + "'");
            }
            if (section.remaining() != 0) throw io::format_error("trailing bytes in section '" + tag + "'");
        }
        if (c.flags() != flags) throw io::format_error("section flags do not match contents");
        if (c.mus && c.mus->text_length() != c.text_length) throw io::format_error("MUSIX length mismatch");
        if (c.point && c.point->text_length() != c.text_length) throw io::format_error("PTSUS length mismatch");
        if (c.rmq && (!c.mus || c.rmq->size() != c.mus->count())) throw io::format_error("IVSUS does not match MUSIX");
        return c;
    }
};

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::ios_base::failure("read error on " + path.string());
    return bytes;
}

inline void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::ios_base::failure("write error on " + path.string());
}

}  // namespace sus
