#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cooc/errors.hpp"
#include "cooc/index.hpp"
#include "cooc/oracle.hpp"

namespace cooc {

// A rendered adversarial instance: token ids plus printable names (for
// writing token files) and the query set the construction is built for.
struct token_string {
    std::vector<token_id> tokens;
    std::vector<std::string> names;  // id -> text
    std::vector<token_id> query;

    std::size_t n() const { return tokens.size(); }
};

// G_i over Q = {A, B}: "A", i-2 fillers, "B", then u fillers. Plants a +1
// in delta(i); every other contribution lands beyond the universe [2, u].
struct increment_gadget_spec {
    std::uint64_t u = 0;
    std::uint64_t i = 0;
};

// Concatenation of c_j > 0 copies of G_{e_j} for e_1 < ... < e_m: yields
// delta(e_j) = c_j on the universe and delta = 0 elsewhere in it.
struct gadget_concat_spec {
    std::uint64_t u = 0;
    std::vector<std::uint64_t> E;
    std::vector<std::uint64_t> c;

    std::uint64_t total_copies() const {
        std::uint64_t C = 0;
        for (std::uint64_t v : c) C += v;
        return C;
    }
};

// Encodes a set T of even integers from {k+1, ..., k*alpha} into delta over
// blocks R_j of length 3*k*alpha, q = k.
struct set_encoding_spec {
    std::uint64_t k = 0;
    std::uint64_t alpha = 0;
    std::vector<std::uint64_t> T;
};

// Predecessor-problem reduction: lmco(x) equals the predecessor of x in X.
struct predecessor_instance_spec {
    std::uint64_t u = 0;
    std::vector<std::uint64_t> X;
};

namespace gadget_detail {

enum : token_id { tok_a = 0, tok_b = 1, tok_filler = 2 };

inline token_string make_ab_string() {
    token_string ts;
    ts.names = {"A", "B", "$"};
    ts.query = {tok_a, tok_b};
    return ts;
}

inline void append_increment(token_string& ts, std::uint64_t u, std::uint64_t i) {
    ts.tokens.push_back(tok_a);
    ts.tokens.insert(ts.tokens.end(), static_cast<std::size_t>(i - 2), tok_filler);
    ts.tokens.push_back(tok_b);
    ts.tokens.insert(ts.tokens.end(), static_cast<std::size_t>(u), tok_filler);
}

inline void check_increment_range(std::uint64_t u, std::uint64_t i) {
    if (i < 2 || i > u)
        throw invalid_spec_error("gadget parameter i = " + std::to_string(i) +
                                 " outside [2, " + std::to_string(u) + "]");
}

} // namespace gadget_detail

inline token_string render_increment(const increment_gadget_spec& spec) {
    gadget_detail::check_increment_range(spec.u, spec.i);
    token_string ts = gadget_detail::make_ab_string();
    gadget_detail::append_increment(ts, spec.u, spec.i);
    return ts;
}

inline token_string render_concat(const gadget_concat_spec& spec) {
    if (spec.E.size() != spec.c.size())
        throw invalid_spec_error("E and c must have equal length");
    for (std::size_t j = 0; j < spec.E.size(); ++j) {
        gadget_detail::check_increment_range(spec.u, spec.E[j]);
        if (j > 0 && spec.E[j] <= spec.E[j - 1])
            throw invalid_spec_error("E must be strictly increasing");
        if (spec.c[j] == 0) throw invalid_spec_error("copy counts must be positive");
    }
    token_string ts = gadget_detail::make_ab_string();
    for (std::size_t j = 0; j < spec.E.size(); ++j)
        for (std::uint64_t rep = 0; rep < spec.c[j]; ++rep)
            gadget_detail::append_increment(ts, spec.u, spec.E[j]);
    return ts;
}

inline token_string render_predecessor_instance(const predecessor_instance_spec& spec) {
    gadget_concat_spec concat;
    concat.u = spec.u;
    for (std::size_t j = 0; j < spec.X.size(); ++j) {
        gadget_detail::check_increment_range(spec.u, spec.X[j]);
        if (j > 0 && spec.X[j] <= spec.X[j - 1])
            throw invalid_spec_error("X must be strictly increasing");
        concat.E.push_back(spec.X[j]);
        concat.c.push_back(j == 0 ? spec.X[0] : spec.X[j] - spec.X[j - 1]);
    }
    if (concat.E.empty()) return gadget_detail::make_ab_string();
    return render_concat(concat);
}

// R_j layout: C_1 ... C_k in positions 1..k, a second occurrence of C_i at
// position i + e_i for i < k, fillers elsewhere, total length 3*k*alpha.
// T is padded to a multiple of k-1 with the smallest even integers from
// {k*alpha+1, ..., 2*k*alpha}; their contributions stay above k*alpha.
inline token_string render_set_encoding(const set_encoding_spec& spec) {
    const std::uint64_t k = spec.k, alpha = spec.alpha;
    if (k < 3) throw invalid_spec_error("set encoding needs k >= 3");
    if (alpha < k) throw invalid_spec_error("alpha must be at least k");

    std::vector<std::uint64_t> elems(spec.T);
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i > 0 && elems[i] == elems[i - 1])
            throw invalid_spec_error("T has duplicate element " + std::to_string(elems[i]));
        if (elems[i] % 2 != 0)
            throw invalid_spec_error("T element " + std::to_string(elems[i]) + " is odd");
        if (elems[i] < k + 1 || elems[i] > k * alpha)
            throw invalid_spec_error("T element " + std::to_string(elems[i]) +
                                     " outside {" + std::to_string(k + 1) + ", ..., " +
                                     std::to_string(k * alpha) + "}");
    }

    token_string ts;
    for (std::uint64_t i = 1; i <= k; ++i) ts.names.push_back("C" + std::to_string(i));
    ts.names.push_back("$");
    const token_id filler = static_cast<token_id>(k);
    for (std::uint64_t i = 0; i < k; ++i) ts.query.push_back(static_cast<token_id>(i));
    if (elems.empty()) return ts;

    std::uint64_t pad = elems.size() % (k - 1) == 0 ? 0 : (k - 1) - elems.size() % (k - 1);
    std::uint64_t filler_elem = k * alpha + 1 + (k * alpha + 1) % 2;  // smallest even > k*alpha
    for (std::uint64_t added = 0; added < pad; ++added, filler_elem += 2)
        elems.push_back(filler_elem);

    const std::uint64_t block_len = 3 * k * alpha;
    for (std::size_t base = 0; base < elems.size(); base += k - 1) {
        std::vector<token_id> block(static_cast<std::size_t>(block_len), filler);
        for (std::uint64_t i = 1; i <= k; ++i)
            block[static_cast<std::size_t>(i - 1)] = static_cast<token_id>(i - 1);
        for (std::uint64_t i = 1; i < k; ++i) {
            std::uint64_t e = elems[base + static_cast<std::size_t>(i) - 1];
            block[static_cast<std::size_t>(i + e - 1)] = static_cast<token_id>(i - 1);
        }
        ts.tokens.insert(ts.tokens.end(), block.begin(), block.end());
    }
    return ts;
}

// ---------------------------------------------------------------------------
// Executable verification of the constructions' stated delta-properties.
// Failures are report entries, not exceptions.
// ---------------------------------------------------------------------------

struct claim_check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct claim_report {
    std::vector<claim_check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

inline claim_report verify_claims(const increment_gadget_spec& spec,
                                  const cooccurrence_index& ix) {
    claim_report rep;
    rep.add("delta(i) == 1", delta_at(ix.encoding(), spec.i) == 1);
    rep.add("n == i + u", static_cast<std::uint64_t>(ix.n()) == spec.i + spec.u);
    return rep;
}

inline claim_report verify_claims(const gadget_concat_spec& spec,
                                  const cooccurrence_index& ix) {
    claim_report rep;
    bool deltas_ok = true;
    std::string bad;
    std::size_t next = 0;
    for (std::uint64_t e = 2; e <= spec.u; ++e) {
        std::int64_t expected = 0;
        if (next < spec.E.size() && spec.E[next] == e)
            expected = static_cast<std::int64_t>(spec.c[next++]);
        std::int64_t got = delta_at(ix.encoding(), e);
        if (got != expected) {
            deltas_ok = false;
            bad = "delta(" + std::to_string(e) + ") = " + std::to_string(got) +
                  ", expected " + std::to_string(expected);
            break;
        }
    }
    rep.add("delta(e_i) == c_i on U, 0 elsewhere in U", deltas_ok, bad);
    std::size_t m = spec.E.size();
    rep.add("m <= d <= 8m",
            m <= ix.d() && ix.d() <= 8 * m,
            "d = " + std::to_string(ix.d()) + ", m = " + std::to_string(m));
    rep.add("n <= 2uC",
            static_cast<std::uint64_t>(ix.n()) <= 2 * spec.u * spec.total_copies());
    return rep;
}

inline claim_report verify_claims(const set_encoding_spec& spec,
                                  const cooccurrence_index& ix) {
    claim_report rep;
    bool ok = true;
    std::string bad;
    for (std::uint64_t i = spec.k + 1; i <= spec.k * spec.alpha; ++i) {
        if (i % 2 != 0) continue;
        bool in_t = std::find(spec.T.begin(), spec.T.end(), i) != spec.T.end();
        std::int64_t got = delta_at(ix.encoding(), i);
        if (got != (in_t ? 1 : 0)) {
            ok = false;
            bad = "delta(" + std::to_string(i) + ") = " + std::to_string(got) +
                  (in_t ? ", expected 1" : ", expected 0");
            break;
        }
    }
    rep.add("delta(i) == 1 iff i in T, over even i in {k+1..k*alpha}", ok, bad);
    std::uint64_t blocks = spec.T.empty() ? 0 : (spec.T.size() + spec.k - 2) / (spec.k - 1);
    rep.add("n == 3*k*alpha per block",
            static_cast<std::uint64_t>(ix.n()) == 3 * spec.k * spec.alpha * blocks);
    return rep;
}

inline claim_report verify_claims(const predecessor_instance_spec& spec,
                                  const cooccurrence_index& ix) {
    claim_report rep;
    bool ok = true;
    std::string bad;
    for (std::uint64_t x = 2; x <= spec.u; ++x) {
        std::int64_t expected = 0;  // 0 when x has no predecessor in X
        for (std::uint64_t v : spec.X)
            if (v <= x) expected = static_cast<std::int64_t>(v);
        std::int64_t got = ix.lmco(static_cast<std::int64_t>(x));
        if (got != expected) {
            ok = false;
            bad = "lmco(" + std::to_string(x) + ") = " + std::to_string(got) +
                  ", expected " + std::to_string(expected);
            break;
        }
    }
    rep.add("lmco(x) == predecessor of x in X", ok, bad);
    rep.add("d <= 8m", ix.d() <= 8 * spec.X.size(),
            "d = " + std::to_string(ix.d()));
    rep.add("n <= 2u^2", static_cast<std::uint64_t>(ix.n()) <= 2 * spec.u * spec.u);
    return rep;
}

} // namespace cooc
