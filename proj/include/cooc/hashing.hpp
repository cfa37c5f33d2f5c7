#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <span>

#include <openssl/evp.h>

namespace cooc {

using token_id = std::uint32_t;

inline constexpr std::uint64_t default_seed = 0x9e3779b97f4a7c15ULL;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seeded integer hash. The seed is recorded by whoever builds with it so
// that runs are reproducible.
struct seeded_hash {
    std::uint64_t seed = default_seed;
    std::size_t operator()(std::uint64_t x) const {
        return static_cast<std::size_t>(splitmix64(x ^ seed));
    }
};

using digest32 = std::array<std::uint8_t, 32>;

// SHA-256 of the token stream, fed as little-endian u32 so the digest does
// not depend on host endianness or on whether the stream came from a file
// or from memory.
inline digest32 token_digest(std::span<const token_id> tokens) {
    digest32 out{};
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<std::uint8_t, 4096> buf;
    std::size_t fill = 0;
    for (token_id t : tokens) {
        buf[fill++] = static_cast<std::uint8_t>(t);
        buf[fill++] = static_cast<std::uint8_t>(t >> 8);
        buf[fill++] = static_cast<std::uint8_t>(t >> 16);
        buf[fill++] = static_cast<std::uint8_t>(t >> 24);
        if (fill == buf.size()) {
            EVP_DigestUpdate(ctx, buf.data(), fill);
            fill = 0;
        }
    }
    if (fill > 0) EVP_DigestUpdate(ctx, buf.data(), fill);
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, out.data(), &len);
    EVP_MD_CTX_free(ctx);
    return out;
}

} // namespace cooc
