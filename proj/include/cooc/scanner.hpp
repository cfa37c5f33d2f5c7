#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cooc/query_profile.hpp"

namespace cooc {

// A minimal co-occurrence [start, end], 1-based inclusive: the window is a
// co-occurrence of Q but stops being one if shrunk from either side.
struct minimal_cooccurrence {
    std::int64_t start = 0;
    std::int64_t end = 0;

    std::int64_t length() const { return end - start + 1; }
    friend bool operator==(const minimal_cooccurrence&, const minimal_cooccurrence&) = default;
};

// Move-to-front list over the members of Q, ordered by recency of last
// occurrence. The back of the list is the least recently seen member, so
// lm(j) = j - last_pos(back) + 1 once every member has been seen.
// Holds exactly q entries no matter how long the scanned string is.
class recency_list {
public:
    explicit recency_list(std::size_t q)
        : prev_(q, unlinked), next_(q, unlinked), last_pos_(q, 0) {}

    // Member `slot` occurred at position `pos` (1-based, non-decreasing).
    void touch(std::size_t slot, std::int64_t pos) {
        last_pos_[slot] = pos;
        if (prev_[slot] == unlinked && head_ != slot) {
            // first occurrence of this member
            ++seen_;
        } else {
            unlink(slot);
        }
        push_front(slot);
    }

    bool complete() const { return seen_ == capacity(); }
    std::size_t seen_count() const { return seen_; }
    std::size_t capacity() const { return prev_.size(); }

    // Last occurrence of the least recently seen member. Pre: complete().
    std::int64_t oldest_pos() const { return last_pos_[tail_]; }

private:
    static constexpr std::size_t unlinked = query_profile::npos;

    void unlink(std::size_t slot) {
        std::size_t p = prev_[slot], n = next_[slot];
        if (p != unlinked) next_[p] = n; else head_ = n;
        if (n != unlinked) prev_[n] = p; else tail_ = p;
        prev_[slot] = next_[slot] = unlinked;
    }

    void push_front(std::size_t slot) {
        prev_[slot] = unlinked;
        next_[slot] = head_;
        if (head_ != unlinked) prev_[head_] = slot; else tail_ = slot;
        head_ = slot;
    }

    std::vector<std::size_t> prev_, next_;
    std::vector<std::int64_t> last_pos_;
    std::size_t head_ = unlinked, tail_ = unlinked;
    std::size_t seen_ = 0;
};

// Consumes S one token at a time and reports each minimal co-occurrence as
// its right endpoint is reached: [j - lm(j) + 1, j] is emitted exactly when
// lm(j) != lm(j-1) + 1. Single pass, O(q) state.
class streaming_scanner {
public:
    explicit streaming_scanner(const query_profile& q) : q_(&q), rl_(q.q()) {}

    std::optional<minimal_cooccurrence> push(token_id t) {
        ++pos_;
        std::size_t slot = q_->slot_of(t);
        if (slot != query_profile::npos) rl_.touch(slot, pos_);
        if (!rl_.complete()) return std::nullopt;
        std::int64_t lm = pos_ - rl_.oldest_pos() + 1;
        bool is_minimal_end = !lm_.has_value() || lm != *lm_ + 1;
        lm_ = lm;
        if (is_minimal_end) return minimal_cooccurrence{pos_ - lm + 1, pos_};
        return std::nullopt;
    }

    // lm(j) for the prefix consumed so far; empty until all of Q was seen.
    std::optional<std::int64_t> lm() const { return lm_; }
    std::int64_t position() const { return pos_; }
    const recency_list& state() const { return rl_; }

private:
    const query_profile* q_;
    recency_list rl_;
    std::int64_t pos_ = 0;
    std::optional<std::int64_t> lm_;
};

// All minimal co-occurrences of Q in S, ordered by (strictly increasing)
// end index. Expected O(n) time, O(q) space beyond input and output.
inline std::vector<minimal_cooccurrence> scan_minimal(std::span<const token_id> s,
                                                      const query_profile& q) {
    std::vector<minimal_cooccurrence> out;
    streaming_scanner scan(q);
    for (token_id t : s)
        if (auto mc = scan.push(t)) out.push_back(*mc);
    return out;
}

} // namespace cooc
