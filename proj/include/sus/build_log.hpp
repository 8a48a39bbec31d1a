#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace sus {

/// Working space (bits of live structures) after each construction stage.
class BuildLog {
   public:
    struct Stage {
        std::string name;
        std::uint64_t working_bits;
    };

    /// Bits held by structures outside the current builder (added to every record).
    void set_external_bits(std::uint64_t bits) noexcept { external_bits_ = bits; }
    [[nodiscard]] std::uint64_t external_bits() const noexcept { return external_bits_; }

    void record(std::string name, std::uint64_t own_bits) {
        stages_.push_back({std::move(name), own_bits + external_bits_});
    }

    [[nodiscard]] const std::vector<Stage>& stages() const noexcept { return stages_; }

    [[nodiscard]] std::uint64_t peak_bits() const noexcept {
        std::uint64_t peak = 0;
        for (const auto& s : stages_) peak = std::max(peak, s.working_bits);
        return peak;
    }

   private:
    std::vector<Stage> stages_;
    std::uint64_t external_bits_ = 0;
};

}  // namespace sus
