#include "hamlab/seed.hpp"

#include <sstream>

namespace hamlab {

namespace {

std::uint64_t hash_label(std::string_view label) {
    // FNV-1a
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Seed::Seed(std::uint64_t master) : master_(master), key_(mix64(master ^ 0x68616d6c6162ULL)) {}

Seed Seed::derive(std::string_view label) const {
    auto path = path_;
    path.emplace_back(label);
    return Seed(master_, std::move(path), mix64(key_ ^ mix64(hash_label(label))));
}

Seed Seed::derive(std::uint64_t index) const {
    auto path = path_;
    path.push_back("#" + std::to_string(index));
    return Seed(master_, std::move(path), mix64(key_ ^ mix64(index ^ 0x5bd1e9955bd1e995ULL) ^ 0x1));
}

std::uint64_t Seed::bits(std::uint64_t counter, std::uint32_t lane) const {
    std::uint64_t z = mix64(key_ ^ mix64(counter));
    return mix64(z ^ (static_cast<std::uint64_t>(lane) * 0xd6e8feb86659fd93ULL));
}

double Seed::uniform(std::uint64_t counter, std::uint32_t lane) const {
    return static_cast<double>(bits(counter, lane) >> 11) * 0x1.0p-53;
}

std::uint64_t Seed::below(std::uint64_t counter, std::uint32_t lane, std::uint64_t bound) const {
    // Lemire's multiply-shift; bias is at most bound / 2^64.
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(bits(counter, lane)) * static_cast<unsigned __int128>(bound);
    return static_cast<std::uint64_t>(wide >> 64);
}

std::string Seed::to_string() const {
    std::ostringstream out;
    out << master_;
    for (const auto& label : path_) out << '/' << label;
    return out.str();
}

}  // namespace hamlab
