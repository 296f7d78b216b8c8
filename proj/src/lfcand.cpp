#include "lyndon_slp/lyndon.hpp"

#include <algorithm>
#include <bit>

namespace lyndon_slp {

std::string_view to_string(MergeCase c) {
    switch (c) {
    case MergeCase::smaller_at_mismatch: return "a";
    case MergeCase::larger_at_mismatch: return "b";
    case MergeCase::periodic_replace: return "c";
    case MergeCase::extend: return "d";
    }
    return "?";
}

void CandidateList::check(std::uint64_t var_len) const {
    auto fail = [&](const std::string& what) {
        std::string list;
        for (auto x : lengths_) list += " " + std::to_string(x);
        throw InvariantViolation("candidate list [" + list + " ] for length " + std::to_string(var_len) + ": " +
                                 what);
    };
    if (lengths_.empty()) fail("empty");
    if (lengths_.front() < 1 || lengths_.back() > var_len) fail("entry out of range");
    for (std::size_t j = 1; j < lengths_.size(); ++j) {
        // lengths_[j] > 2 * lengths_[j-1], written to avoid overflow
        if (lengths_[j] <= lengths_[j - 1] || lengths_[j] - lengths_[j - 1] <= lengths_[j - 1]) {
            fail("doubling gap violated");
        }
    }
    const auto bound = static_cast<std::size_t>(std::bit_width(var_len)); // floor(log2 N) + 1
    if (lengths_.size() > bound) fail("more than floor(log2 N) + 1 entries");
}

CandidateList lfcand_leaf(std::uint8_t) { return CandidateList({1}); }

CandidateList lfcand_merge(const LcpEngine& engine, VarId xi, const CandidateList& cand_l,
                           const CandidateList& cand_r, std::vector<MergeCase>* trace) {
    const Slp& slp = engine.slp();
    const Rule& rule = slp.rule(xi);
    if (rule.is_terminal()) throw std::invalid_argument("lfcand_merge needs a concatenation rule");
    if (cand_l.empty() || cand_r.empty()) throw InvariantViolation("child candidate list is empty");

    const std::uint64_t total = slp.length(xi);
    const std::uint64_t right_len = slp.length(rule.right);
    const auto suffix = [&](std::uint64_t len) { return Span{xi, total - len + 1, len}; };

    // Suffixes of the right child are suffixes of xi with the same lengths.
    std::vector<std::uint64_t> d_list = cand_r.lengths();
    for (const std::uint64_t s : cand_l.lengths()) {
        const std::uint64_t cur = s + right_len;
        const std::uint64_t d = d_list.back();
        if (cur <= d) throw InvariantViolation("extended candidate is not longer than the longest entry");

        const std::uint64_t mismatch_len = engine.lcp(suffix(cur), suffix(d));
        MergeCase c;
        if (mismatch_len == d) {
            if (cur - d <= d) {
                d_list.back() = cur;
                c = MergeCase::periodic_replace;
            } else {
                d_list.push_back(cur);
                c = MergeCase::extend;
            }
        } else {
            if (mismatch_len > d) throw InvariantViolation("lcp exceeds the shorter span");
            const std::uint8_t a = slp.char_at(xi, total - cur + 1 + mismatch_len);
            const std::uint8_t b = slp.char_at(xi, total - d + 1 + mismatch_len);
            if (a < b) {
                const auto keep = std::upper_bound(d_list.begin(), d_list.end(), mismatch_len);
                d_list.erase(keep, d_list.end());
                d_list.push_back(cur);
                c = MergeCase::smaller_at_mismatch;
            } else if (a > b) {
                c = MergeCase::larger_at_mismatch;
            } else {
                throw InvariantViolation("characters after the common prefix are equal");
            }
        }
        if (trace) trace->push_back(c);
    }

    // Case (d) keeps d even when the run of its root continues to the left,
    // e.g. "aa"."a" gives [1, 3]. Such an entry e = l^k loses to l^(k+1) or to a
    // shorter power for every extension, so drop it.
    while (d_list.size() > 1) {
        const std::uint64_t e = d_list.front();
        const std::uint64_t q = shortest_period_of_power(engine, suffix(e));
        if (e + q > total || engine.lcp(suffix(e + q), suffix(e)) < e) break;
        d_list.erase(d_list.begin());
    }
    return CandidateList(std::move(d_list));
}

CandidateTable lfcand_all(const LcpEngine& engine, const CandidateObserver* observer) {
    const Slp& slp = engine.slp();
    CandidateTable table;
    for (VarId v = 1; v <= slp.size(); ++v) {
        const Rule& r = slp.rule(v);
        CandidateList c = r.is_terminal() ? lfcand_leaf(r.byte) : lfcand_merge(engine, v, table[r.left], table[r.right]);
        c.check(slp.length(v));
        if (observer && observer->on_list) observer->on_list(v, slp.length(v), c);
        table.push_back(std::move(c));
    }
    return table;
}

std::uint64_t last_factor(const CandidateList& cand) {
    if (cand.empty()) throw InvariantViolation("last_factor of an empty candidate list");
    return cand.shortest();
}

} // namespace lyndon_slp
