#include "lyndon_slp/lyndon.hpp"

#include <algorithm>

#include "int_factor.hpp"

namespace lyndon_slp {

std::uint64_t shortest_period_of_power(const LcpEngine& engine, const Span& block) {
    engine.slp().check(block);
    if (block.len == 0) throw std::invalid_argument("period of an empty block");
    const std::uint64_t n = block.len;
    auto is_period = [&](std::uint64_t d) {
        return d == n || engine.equal({block.var, block.start, n - d}, {block.var, block.start + d, n - d});
    };
    // The divisors of n that are periods are exactly the multiples of the
    // primitive root length, so each prime can be stripped independently.
    std::uint64_t q = n;
    std::uint64_t exhausted = 0;
    for (const std::uint64_t p : detail::prime_factors(n)) {
        if (p == exhausted) continue;
        if (is_period(q / p)) {
            q /= p;
        } else {
            exhausted = p;
        }
    }
    return q;
}

LyndonFactorization factorize_slp(const Slp& slp, const FactorizeOptions& opts, FactorizeStats* stats) {
    const LcpEngine base_engine(slp, opts.mode, opts.seed);
    FactorizeStats local;
    FactorizeStats& st = stats ? *stats : local;

    auto record = [&](VarId v, std::uint64_t len, const CandidateList& c) {
        c.check(len);
        ++st.lists_built;
        st.max_list_size = std::max(st.max_list_size, c.size());
        if (opts.observer && opts.observer->on_list) opts.observer->on_list(v, len, c);
    };
    const CandidateObserver counting{record};
    const CandidateTable table = lfcand_all(base_engine, &counting);

    std::vector<LyndonFactor> reversed;
    std::uint64_t remaining = slp.length();
    while (remaining > 0) {
        const PrefixSpine spine = prefix_spine(slp, remaining);
        const VarId root = spine.chain_root();
        std::uint64_t block_len = 0;
        std::uint64_t period = 0;

        if (spine.parts.size() == 1) {
            block_len = last_factor(table[root]);
            period = shortest_period_of_power(base_engine, {root, remaining - block_len + 1, block_len});
        } else {
            // Only the chain rules are new; lists of original variables are reused.
            const LcpEngine engine(spine.slp, opts.mode, opts.seed);
            CandidateList acc = table[spine.parts.front()];
            for (std::size_t k = 1; k < spine.parts.size(); ++k) {
                const auto y = static_cast<VarId>(spine.base_size + k);
                acc = lfcand_merge(engine, y, acc, table[spine.parts[k]]);
                record(y, spine.slp.length(y), acc);
            }
            st.chain_rules += spine.parts.size() - 1;
            block_len = last_factor(acc);
            if (block_len <= remaining) {
                period = shortest_period_of_power(engine, {root, remaining - block_len + 1, block_len});
            }
        }

        if (block_len == 0 || block_len > remaining || period == 0 || block_len % period != 0) {
            throw InvariantViolation("inconsistent last factor: block " + std::to_string(block_len) + ", period " +
                                     std::to_string(period) + ", remaining " + std::to_string(remaining));
        }
        reversed.push_back({period, block_len / period});
        remaining -= block_len;
    }
    return LyndonFactorization{{reversed.rbegin(), reversed.rend()}};
}

} // namespace lyndon_slp
