#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cooc/errors.hpp"
#include "cooc/hashing.hpp"

namespace cooc {

// The query set Q mapped to dense slots [0, q). Duplicates in the input are
// collapsed before the q >= 2 check. Membership lookups go through a small
// seeded open-addressing table, expected O(1).
class query_profile {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    explicit query_profile(std::span<const token_id> members,
                           std::uint64_t seed = default_seed)
        : seed_(seed) {
        members_.assign(members.begin(), members.end());
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.size() < 2)
            throw invalid_query_error("query set needs at least two distinct members, got " +
                                      std::to_string(members_.size()));
        std::size_t cap = std::bit_ceil(members_.size() * 2);
        table_.assign(cap, empty_slot);
        for (std::size_t s = 0; s < members_.size(); ++s) {
            std::size_t pos = probe_start(members_[s]);
            while (table_[pos] != empty_slot) pos = (pos + 1) & (cap - 1);
            table_[pos] = static_cast<std::uint32_t>(s);
        }
    }

    query_profile(std::initializer_list<token_id> members,
                  std::uint64_t seed = default_seed)
        : query_profile(std::span<const token_id>(members.begin(), members.size()), seed) {}

    std::size_t q() const { return members_.size(); }
    const std::vector<token_id>& members() const { return members_; }
    std::uint64_t seed() const { return seed_; }

    bool contains(token_id t) const { return slot_of(t) != npos; }

    // Dense slot of t in [0, q), or npos when t is not a member.
    std::size_t slot_of(token_id t) const {
        std::size_t mask = table_.size() - 1;
        std::size_t pos = probe_start(t);
        while (table_[pos] != empty_slot) {
            std::uint32_t s = table_[pos];
            if (members_[s] == t) return s;
            pos = (pos + 1) & mask;
        }
        return npos;
    }

private:
    static constexpr std::uint32_t empty_slot = std::numeric_limits<std::uint32_t>::max();

    std::size_t probe_start(token_id t) const {
        return seeded_hash{seed_}(t) & (table_.size() - 1);
    }

    std::vector<token_id> members_;     // sorted, distinct
    std::vector<std::uint32_t> table_;  // open addressing: slot index or empty
    std::uint64_t seed_;
};

} // namespace cooc
