#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <vector>

#include <zlib.h>

#include "cooc/delta.hpp"
#include "cooc/hashing.hpp"
#include "cooc/predecessor.hpp"
#include "cooc/query_profile.hpp"
#include "cooc/scanner.hpp"

namespace cooc {

struct index_options {
    std::uint64_t seed = default_seed;
    pred_variant variant = pred_variant::baseline;
};

struct index_metadata {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t mu = 0;      // number of minimal co-occurrences
    std::uint64_t seed = 0;   // build-time hashing seed; not part of the format
    digest32 digest{};

    friend bool operator==(const index_metadata& a, const index_metadata& b) {
        return a.n == b.n && a.q == b.q && a.mu == b.mu && a.digest == b.digest;
    }
};

// Compact co-occurrence index: the sparse difference encoding plus a
// predecessor structure over its keys. Space is O(d) words; lmco and co
// queries cost one predecessor search plus constant work.
//
// Serialized form (little-endian):
//   magic "COOC" | version u32 = 1 | n u64 | q u64 | mu u64 | d u64 |
//   r1 u64 (UINT64_MAX = none) | z[d] u64 | delta[d] i64 | F[d] i64 |
//   W[d] i64 | digest 32 bytes | crc32 u32 over everything before it
class cooccurrence_index {
public:
    static constexpr std::uint32_t format_version = 1;
    static constexpr std::uint64_t r1_none = std::numeric_limits<std::uint64_t>::max();

    cooccurrence_index() = default;

    cooccurrence_index(delta_encoding enc, index_metadata meta,
                       pred_variant variant = pred_variant::baseline)
        : enc_(std::move(enc)), meta_(meta),
          pmap_(enc_.z, static_cast<std::uint64_t>(enc_.n), variant) {}

    // Single pass over S: stream the minimal co-occurrences, fold them into
    // delta, then index the keys for predecessor search. Expected O(n) time,
    // O(d + q) working space beyond the input.
    static cooccurrence_index build(std::span<const token_id> s, const query_profile& q,
                                    index_options opt = {}) {
        std::vector<minimal_cooccurrence> mins = scan_minimal(s, q);
        delta_encoding enc = build_delta(mins, static_cast<std::int64_t>(s.size()), opt.seed);
        index_metadata meta;
        meta.n = static_cast<std::int64_t>(s.size());
        meta.q = static_cast<std::int64_t>(q.q());
        meta.mu = static_cast<std::int64_t>(mins.size());
        meta.seed = opt.seed;
        meta.digest = token_digest(s);
        return cooccurrence_index(std::move(enc), meta, opt.variant);
    }

    // Number of left-minimal co-occurrences of length w. Lengths outside
    // [2, n] hold none.
    std::int64_t lmco(std::int64_t w) const {
        if (w < 2 || w > enc_.n) return 0;
        auto p = pmap_.pred(static_cast<std::uint64_t>(w));
        if (!p) return 0;
        return enc_.F[p->rank - 1];
    }

    // Number of length-w windows of S containing every member of Q:
    // (w+1)*lmco(w) - W[pred(w)] - max(w - r1, 0).
    std::int64_t co(std::int64_t w) const {
        if (w < 1 || w > enc_.n) return 0;
        auto p = pmap_.pred(static_cast<std::uint64_t>(w));
        if (!p) return 0;
        std::size_t j = p->rank - 1;
        return (w + 1) * enc_.F[j] - enc_.W[j] - overhang(w);
    }

    // co(0..n) in one O(n + d) sweep; entry [w] equals co(w).
    std::vector<std::int64_t> full_table() const {
        std::vector<std::int64_t> table(static_cast<std::size_t>(enc_.n) + 1, 0);
        std::size_t j = 0;
        std::int64_t running_f = 0, running_w = 0;
        for (std::int64_t w = 1; w <= enc_.n; ++w) {
            while (j < enc_.d() && enc_.z[j] <= static_cast<std::uint64_t>(w)) {
                running_f = enc_.F[j];
                running_w = enc_.W[j];
                ++j;
            }
            if (j > 0)
                table[static_cast<std::size_t>(w)] =
                    (w + 1) * running_f - running_w - overhang(w);
        }
        return table;
    }

    const delta_encoding& encoding() const { return enc_; }
    const index_metadata& metadata() const { return meta_; }
    const predecessor_map& pmap() const { return pmap_; }
    std::int64_t n() const { return enc_.n; }
    std::size_t d() const { return enc_.d(); }

    // Logical size in 64-bit words: the four d-sized arrays, the
    // predecessor structure, and fixed metadata.
    std::size_t resident_words() const {
        return 4 * enc_.d() + pmap_.resident_words() + sizeof(index_metadata) / 8 + 2;
    }

    std::vector<std::uint8_t> serialize() const {
        std::vector<std::uint8_t> out;
        out.reserve(48 + 32 * enc_.d() + 36);
        out.insert(out.end(), {'C', 'O', 'O', 'C'});
        put_u32(out, format_version);
        put_u64(out, static_cast<std::uint64_t>(meta_.n));
        put_u64(out, static_cast<std::uint64_t>(meta_.q));
        put_u64(out, static_cast<std::uint64_t>(meta_.mu));
        put_u64(out, enc_.d());
        put_u64(out, enc_.r1 ? static_cast<std::uint64_t>(*enc_.r1) : r1_none);
        for (std::uint64_t v : enc_.z) put_u64(out, v);
        for (std::int64_t v : enc_.delta) put_u64(out, static_cast<std::uint64_t>(v));
        for (std::int64_t v : enc_.F) put_u64(out, static_cast<std::uint64_t>(v));
        for (std::int64_t v : enc_.W) put_u64(out, static_cast<std::uint64_t>(v));
        out.insert(out.end(), meta_.digest.begin(), meta_.digest.end());
        std::uint32_t crc = static_cast<std::uint32_t>(
            ::crc32(0L, out.data(), static_cast<uInt>(out.size())));
        put_u32(out, crc);
        return out;
    }

    static cooccurrence_index deserialize(std::span<const std::uint8_t> bytes,
                                          pred_variant variant = pred_variant::baseline) {
        constexpr std::size_t header = 4 + 4 + 5 * 8;
        if (bytes.size() < header) throw truncation_error("stream shorter than header");
        if (std::memcmp(bytes.data(), "COOC", 4) != 0)
            throw bad_magic_error("bad magic");
        std::uint32_t version = get_u32(bytes, 4);
        if (version != format_version)
            throw version_error("unsupported format version " + std::to_string(version));
        std::uint64_t n = get_u64(bytes, 8);
        std::uint64_t q = get_u64(bytes, 16);
        std::uint64_t mu = get_u64(bytes, 24);
        std::uint64_t d = get_u64(bytes, 32);
        std::uint64_t r1 = get_u64(bytes, 40);

        if (d > (bytes.size() - header) / 8)  // cheap overflow-safe bound
            throw truncation_error("stream too short for " + std::to_string(d) + " entries");
        std::size_t expected = header + 4 * 8 * static_cast<std::size_t>(d) + 32 + 4;
        if (bytes.size() < expected) throw truncation_error("truncated stream");
        if (bytes.size() > expected) throw truncation_error("trailing bytes after index");

        std::uint32_t stored_crc = get_u32(bytes, expected - 4);
        std::uint32_t actual_crc = static_cast<std::uint32_t>(
            ::crc32(0L, bytes.data(), static_cast<uInt>(expected - 4)));
        if (stored_crc != actual_crc) throw checksum_error("crc32 mismatch");

        delta_encoding enc;
        enc.n = static_cast<std::int64_t>(n);
        if (r1 != r1_none) enc.r1 = static_cast<std::int64_t>(r1);
        std::size_t off = header;
        auto read_array = [&](auto& dst) {
            dst.resize(static_cast<std::size_t>(d));
            for (auto& v : dst) {
                v = static_cast<std::remove_reference_t<decltype(v)>>(get_u64(bytes, off));
                off += 8;
            }
        };
        read_array(enc.z);
        read_array(enc.delta);
        read_array(enc.F);
        read_array(enc.W);
        std::int64_t running_f = 0, running_w = 0;
        for (std::size_t i = 0; i < enc.z.size(); ++i) {
            if (i > 0 && enc.z[i] <= enc.z[i - 1])
                throw format_error("keys not strictly increasing");
            if (enc.z[i] < 2 || enc.z[i] > n) throw format_error("key outside [2, n]");
            if (enc.delta[i] == 0) throw format_error("zero delta entry");
            running_f += enc.delta[i];
            running_w += static_cast<std::int64_t>(enc.z[i]) * enc.delta[i];
            if (enc.F[i] != running_f || enc.W[i] != running_w)
                throw format_error("prefix sums inconsistent with delta");
        }
        if (enc.r1 && (*enc.r1 < 1 || *enc.r1 > enc.n))
            throw format_error("r1 outside [1, n]");

        index_metadata meta;
        meta.n = enc.n;
        meta.q = static_cast<std::int64_t>(q);
        meta.mu = static_cast<std::int64_t>(mu);
        std::memcpy(meta.digest.data(), bytes.data() + off, 32);
        return cooccurrence_index(std::move(enc), meta, variant);
    }

    friend bool operator==(const cooccurrence_index& a, const cooccurrence_index& b) {
        return a.enc_ == b.enc_ && a.meta_ == b.meta_;
    }

private:
    std::int64_t overhang(std::int64_t w) const {
        return (enc_.r1 && w > *enc_.r1) ? w - *enc_.r1 : 0;
    }

    static void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    static void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    static std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t off) {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[off + static_cast<std::size_t>(i)]} << (8 * i);
        return v;
    }
    static std::uint64_t get_u64(std::span<const std::uint8_t> b, std::size_t off) {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[off + static_cast<std::size_t>(i)]} << (8 * i);
        return v;
    }

    delta_encoding enc_;
    index_metadata meta_;
    predecessor_map pmap_;
};

// Convenience: build from a token vector and raw member list.
inline cooccurrence_index build_index(std::span<const token_id> s,
                                      const query_profile& q, index_options opt = {}) {
    return cooccurrence_index::build(s, q, opt);
}

} // namespace cooc
