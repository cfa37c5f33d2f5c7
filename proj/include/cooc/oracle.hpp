#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cooc/scanner.hpp"

namespace cooc {

// Brute-force reference answers, computed straight from the definitions.
// Quadratic and proud of it: this is the ground truth the compact index is
// tested against, so clarity beats speed. Fine up to n of a few thousand.
struct oracle_result {
    std::vector<std::int64_t> lmco_table;            // [0..n], indexed by length
    std::vector<std::int64_t> co_table;              // [0..n], indexed by length
    std::vector<minimal_cooccurrence> minimal_list;  // ordered by end index
    std::optional<std::int64_t> r1;
};

namespace detail {

// Does S[i..j] (1-based, inclusive) contain every member at least once?
inline bool window_contains_all(std::span<const token_id> s,
                                std::span<const token_id> members,
                                std::int64_t i, std::int64_t j) {
    if (i > j || i < 1) return false;
    std::size_t found = 0;
    std::vector<bool> seen(members.size(), false);
    for (std::int64_t p = i; p <= j; ++p) {
        for (std::size_t m = 0; m < members.size(); ++m) {
            if (!seen[m] && s[static_cast<std::size_t>(p - 1)] == members[m]) {
                seen[m] = true;
                if (++found == members.size()) return true;
            }
        }
    }
    return found == members.size();
}

} // namespace detail

// Full reference result. Accepts any q >= 1 (the library proper rejects
// q < 2; the oracle exists to state what the definitions say regardless).
inline oracle_result oracle_scan(std::span<const token_id> s,
                                 std::span<const token_id> members) {
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    oracle_result res;
    res.lmco_table.assign(static_cast<std::size_t>(n) + 1, 0);
    res.co_table.assign(static_cast<std::size_t>(n) + 1, 0);

    // co(w): slide a length-w window, counting how many member kinds it holds.
    std::unordered_map<token_id, std::size_t> member_slot;
    for (token_id t : members) {
        std::size_t next_slot = member_slot.size();
        member_slot.emplace(t, next_slot);
    }
    const std::size_t q = member_slot.size();
    std::vector<token_id> distinct_members;
    distinct_members.reserve(q);
    for (const auto& [tok, slot] : member_slot) distinct_members.push_back(tok);
    std::vector<std::int64_t> count(q, 0);
    for (std::int64_t w = 1; w <= n; ++w) {
        std::fill(count.begin(), count.end(), 0);
        std::size_t kinds = 0;
        for (std::int64_t j = 1; j <= n; ++j) {
            auto it = member_slot.find(s[static_cast<std::size_t>(j - 1)]);
            if (it != member_slot.end() && count[it->second]++ == 0) ++kinds;
            if (j > w) {
                auto out = member_slot.find(s[static_cast<std::size_t>(j - w - 1)]);
                if (out != member_slot.end() && --count[out->second] == 0) --kinds;
            }
            if (j >= w && kinds == q) res.co_table[static_cast<std::size_t>(w)]++;
        }
    }

    // lmco(w): for each end k the left-minimal co-occurrence starts at the
    // smallest last-occurrence among the members. Minimality of [i, k] is
    // decided by the one-step shrink checks from the definition.
    std::unordered_map<token_id, std::int64_t> last;
    for (std::int64_t k = 1; k <= n; ++k) {
        auto it = member_slot.find(s[static_cast<std::size_t>(k - 1)]);
        if (it != member_slot.end()) last[s[static_cast<std::size_t>(k - 1)]] = k;
        if (last.size() < q) continue;
        std::int64_t start = k;
        for (const auto& [tok, pos] : last) start = std::min(start, pos);
        res.lmco_table[static_cast<std::size_t>(k - start + 1)]++;
        if (!res.r1) res.r1 = k;
        bool right_shrink_ok = detail::window_contains_all(s, distinct_members, start, k - 1);
        bool left_shrink_ok = detail::window_contains_all(s, distinct_members, start + 1, k);
        if (!right_shrink_ok && !left_shrink_ok)
            res.minimal_list.push_back(minimal_cooccurrence{start, k});
    }
    return res;
}

inline std::vector<std::int64_t> oracle_co(std::span<const token_id> s,
                                           std::span<const token_id> members) {
    return oracle_scan(s, members).co_table;
}

inline std::vector<std::int64_t> oracle_lmco(std::span<const token_id> s,
                                             std::span<const token_id> members) {
    return oracle_scan(s, members).lmco_table;
}

} // namespace cooc
