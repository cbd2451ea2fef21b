#pragma once

#include <array>
#include <cstdint>

namespace fpt {

// Philox4x64-10 counter-based generator.
//
// One block call maps (key, counter) -> 4 x 64-bit words with no carried
// state, so any (seed, stream, draw-index) triple is addressable directly
// and replicas can be replayed or reordered without coordination.
// Constants are the standard Philox multipliers and Weyl increments.
struct Philox4x64 {
    using Block = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
    static constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

    static Block block(Key key, Block counter) {
        for (int round = 0; round < 9; ++round) {
            counter = one_round(counter, key);
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return one_round(counter, key);
    }

  private:
    static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
        const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
        hi = static_cast<std::uint64_t>(p >> 64);
        lo = static_cast<std::uint64_t>(p);
    }

    static Block one_round(const Block& c, const Key& k) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMult0, c[0], hi0, lo0);
        mulhilo(kMult1, c[2], hi1, lo1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
};

// Sequential view over one Philox stream. Streams are identified by
// (seed, stream_id); the block counter occupies words 0..1 of the Philox
// counter, giving 2^128 blocks per stream. Each block yields 4 draws.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{seed, stream_id}, counter_{0, 0, 0, 0}, have_(0) {}

    std::uint64_t next_u64() {
        if (have_ == 0) refill();
        return buffer_[4 - have_--];
    }

    // Uniform on the open interval (0,1): 53 significant bits, offset by
    // half an ulp so 0 and 1 are unreachable.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    std::uint64_t seed() const { return key_[0]; }
    std::uint64_t stream_id() const { return key_[1]; }

  private:
    void refill() {
        buffer_ = Philox4x64::block(key_, counter_);
        if (++counter_[0] == 0) ++counter_[1];
        have_ = 4;
    }

    Philox4x64::Key key_;
    Philox4x64::Block counter_;
    Philox4x64::Block buffer_{};
    int have_;
};

}  // namespace fpt
