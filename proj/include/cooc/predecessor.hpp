#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cooc/errors.hpp"

namespace cooc {

enum class pred_variant { baseline, bucketed };

struct pred_result {
    std::uint64_t key = 0;
    std::size_t rank = 0;  // 1-based index of key in the sorted key set

    friend bool operator==(const pred_result&, const pred_result&) = default;
};

// Predecessor-searchable map over sorted distinct keys from [2, n].
// pred(x) returns the largest key <= x with its rank, or nothing when x is
// below every key. Queries above n are treated as x = n.
//
// baseline: plain binary search over the key array.
// bucketed: keys split by their high ceil(log2(n)/2) bits; a three-level
// bitmap finds the nearest non-empty bucket in O(1) and a binary search
// over that bucket (at most ~sqrt(n) keys) finishes the query.
class predecessor_map {
public:
    predecessor_map() = default;

    predecessor_map(std::span<const std::uint64_t> keys, std::uint64_t universe_bound,
                    pred_variant variant = pred_variant::baseline)
        : keys_(keys.begin(), keys.end()), n_(universe_bound), variant_(variant) {
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (i > 0 && keys_[i] <= keys_[i - 1])
                throw build_error("keys must be sorted and distinct");
            if (keys_[i] < 2 || keys_[i] > n_)
                throw build_error("key " + std::to_string(keys_[i]) +
                                  " outside universe [2, " + std::to_string(n_) + "]");
        }
        if (variant_ == pred_variant::bucketed && !keys_.empty()) build_buckets();
    }

    std::optional<pred_result> pred(std::uint64_t x) const {
        if (keys_.empty()) return std::nullopt;
        x = std::min(x, n_);
        if (x < keys_.front()) return std::nullopt;
        if (variant_ == pred_variant::baseline) return pred_in_range(0, keys_.size(), x);

        std::uint64_t b = x >> shift_;
        if (bucket_occupied(b) && keys_[starts_[b]] <= x)
            return pred_in_range(starts_[b], starts_[b + 1], x);
        // Predecessor lives in an earlier bucket; its max key is the answer.
        // An occupied bucket below b exists because keys_.front() <= x.
        std::uint64_t p = prev_set_le(0, b - 1);
        std::size_t end = starts_[p + 1];
        return pred_result{keys_[end - 1], end};
    }

    pred_variant variant() const { return variant_; }
    std::uint64_t universe_bound() const { return n_; }
    std::size_t size() const { return keys_.size(); }
    std::span<const std::uint64_t> keys() const { return keys_; }

    // Logical size in 64-bit words, for space accounting.
    std::size_t resident_words() const {
        return keys_.size() + bits_[0].size() + bits_[1].size() + bits_[2].size() +
               (starts_.size() + 1) / 2 + 2;
    }

private:
    std::optional<pred_result> pred_in_range(std::size_t lo, std::size_t hi,
                                             std::uint64_t x) const {
        auto first = keys_.begin() + static_cast<std::ptrdiff_t>(lo);
        auto last = keys_.begin() + static_cast<std::ptrdiff_t>(hi);
        auto it = std::upper_bound(first, last, x);
        if (it == keys_.begin()) return std::nullopt;
        std::size_t rank = static_cast<std::size_t>(it - keys_.begin());
        return pred_result{keys_[rank - 1], rank};
    }

    void build_buckets() {
        unsigned total_bits = static_cast<unsigned>(std::bit_width(n_));
        unsigned high_bits = (total_bits + 1) / 2;
        shift_ = total_bits - high_bits;
        std::uint64_t buckets = (n_ >> shift_) + 1;

        starts_.assign(buckets + 1, 0);
        for (std::uint64_t k : keys_) starts_[(k >> shift_) + 1]++;
        for (std::size_t b = 1; b <= buckets; ++b) starts_[b] += starts_[b - 1];

        std::size_t words = (buckets + 63) / 64;
        for (auto& level : bits_) {
            level.assign(words, 0);
            words = (words + 63) / 64;
        }
        for (std::uint64_t k : keys_) set_bit(0, k >> shift_);
        for (int level = 1; level < 3; ++level)
            for (std::size_t w = 0; w < bits_[level - 1].size(); ++w)
                if (bits_[level - 1][w] != 0) set_bit(level, w);
    }

    void set_bit(int level, std::uint64_t i) {
        bits_[level][i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    bool bucket_occupied(std::uint64_t b) const {
        return (bits_[0][b >> 6] >> (b & 63)) & 1;
    }

    // Largest set index <= i in bits_[level]. Pre: such an index exists.
    std::uint64_t prev_set_le(int level, std::uint64_t i) const {
        std::uint64_t word = i >> 6;
        std::uint64_t bits = bits_[level][word] & (~std::uint64_t{0} >> (63 - (i & 63)));
        if (bits == 0) {
            if (level == 2) {
                do { --word; } while (bits_[level][word] == 0);
            } else {
                word = prev_set_le(level + 1, word - 1);
            }
            bits = bits_[level][word];
        }
        return (word << 6) + (63 - static_cast<std::uint64_t>(std::countl_zero(bits)));
    }

    std::vector<std::uint64_t> keys_;
    std::uint64_t n_ = 0;
    pred_variant variant_ = pred_variant::baseline;

    unsigned shift_ = 0;
    std::vector<std::uint64_t> bits_[3];  // bucket bitmap + two summary levels
    std::vector<std::uint32_t> starts_;   // bucket -> first key rank (cumulative)
};

} // namespace cooc
