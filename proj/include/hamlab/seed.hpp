#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hamlab {

// Counter-based randomness. A Seed is a master value plus a derivation path;
// every draw is a pure function of (key, counter, lane), so the outcome for a
// given slot never depends on iteration order or on which thread asked.
class Seed {
public:
    Seed() : Seed(0) {}
    explicit Seed(std::uint64_t master);

    Seed derive(std::string_view label) const;
    Seed derive(std::uint64_t index) const;

    std::uint64_t master() const { return master_; }
    const std::vector<std::string>& path() const { return path_; }
    std::uint64_t key() const { return key_; }

    // Raw 64 random bits for (counter, lane).
    std::uint64_t bits(std::uint64_t counter, std::uint32_t lane) const;
    // Uniform double in [0, 1).
    double uniform(std::uint64_t counter, std::uint32_t lane) const;
    // Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t counter, std::uint32_t lane, std::uint64_t bound) const;
    bool bernoulli(std::uint64_t counter, std::uint32_t lane, double p) const {
        return uniform(counter, lane) < p;
    }

    std::string to_string() const;

    friend bool operator==(const Seed& a, const Seed& b) {
        return a.master_ == b.master_ && a.path_ == b.path_;
    }

private:
    Seed(std::uint64_t master, std::vector<std::string> path, std::uint64_t key)
        : master_(master), path_(std::move(path)), key_(key) {}

    std::uint64_t master_;
    std::vector<std::string> path_;
    std::uint64_t key_;
};

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Lane layout shared by every generator so that related models draw the same
// bits for the same slot: lane 0 decides an unordered slot as a whole, lane
// 1 + r decides orientation r of that slot, and the color lanes mirror both.
namespace lanes {
inline constexpr std::uint32_t kJoint = 0;
inline constexpr std::uint32_t kColorBase = 1u << 20;
constexpr std::uint32_t orientation(std::uint32_t r) { return 1 + r; }
constexpr std::uint32_t joint_color() { return kColorBase; }
constexpr std::uint32_t orientation_color(std::uint32_t r) { return kColorBase + 1 + r; }
}  // namespace lanes

}  // namespace hamlab
