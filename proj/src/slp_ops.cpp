#include "lyndon_slp/slp.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace lyndon_slp {
namespace {

// Variables whose concatenation is the prefix of val(v) of length p, left to right.
void prefix_parts(const Slp& slp, VarId v, std::uint64_t p, std::vector<VarId>& out) {
    while (p != slp.length(v)) {
        const Rule& r = slp.rule(v);
        const std::uint64_t left_len = slp.length(r.left);
        if (p <= left_len) {
            v = r.left;
        } else {
            out.push_back(r.left);
            p -= left_len;
            v = r.right;
        }
    }
    out.push_back(v);
}

// Variables whose concatenation is the suffix of val(v) starting at a (1-based), left to right.
void suffix_parts(const Slp& slp, VarId v, std::uint64_t a, std::vector<VarId>& out) {
    std::vector<VarId> rev;
    while (a != 1) {
        const Rule& r = slp.rule(v);
        const std::uint64_t left_len = slp.length(r.left);
        if (a > left_len) {
            a -= left_len;
            v = r.right;
        } else {
            rev.push_back(r.right);
            v = r.left;
        }
    }
    rev.push_back(v);
    out.insert(out.end(), rev.rbegin(), rev.rend());
}

// Left fold of `parts` into new concat rules numbered from next_id.
std::vector<Rule> left_chain(std::span<const VarId> parts, VarId next_id) {
    std::vector<Rule> chain;
    VarId acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        chain.push_back(Rule::concat(acc, parts[k]));
        acc = next_id++;
    }
    return chain;
}

} // namespace

Slp slice_slp(const Slp& slp, std::uint64_t i, std::uint64_t j) {
    const std::uint64_t n = slp.length();
    if (i < 1 || i > j || j > n) {
        throw std::out_of_range("slice [" + std::to_string(i) + ", " + std::to_string(j) +
                                "] is not within [1, " + std::to_string(n) + "]");
    }
    VarId v = slp.root();
    std::uint64_t a = i, b = j;
    std::vector<VarId> parts;
    for (;;) {
        if (a == 1 && b == slp.length(v)) {
            parts.push_back(v);
            break;
        }
        const Rule& r = slp.rule(v);
        const std::uint64_t left_len = slp.length(r.left);
        if (b <= left_len) {
            v = r.left;
        } else if (a > left_len) {
            a -= left_len;
            b -= left_len;
            v = r.right;
        } else {
            suffix_parts(slp, r.left, a, parts);
            prefix_parts(slp, r.right, b - left_len, parts);
            break;
        }
    }
    const auto next = static_cast<VarId>(slp.size() + 1);
    const auto chain = left_chain(parts, next);
    return slp.with_appended(chain, chain.empty() ? parts.front() : static_cast<VarId>(slp.size() + chain.size()));
}

PrefixSpine prefix_spine(const Slp& slp, std::uint64_t prefix_len) {
    if (prefix_len < 1 || prefix_len > slp.length()) {
        throw std::out_of_range("prefix length " + std::to_string(prefix_len) + " is not within [1, " +
                                std::to_string(slp.length()) + "]");
    }
    std::vector<VarId> parts;
    prefix_parts(slp, slp.root(), prefix_len, parts);
    const auto chain = left_chain(parts, static_cast<VarId>(slp.size() + 1));
    const VarId root = chain.empty() ? parts.front() : static_cast<VarId>(slp.size() + chain.size());
    return PrefixSpine{std::move(parts), slp.with_appended(chain, root), slp.size()};
}

Slp build_from_text(std::string_view text) {
    if (text.empty()) throw SlpError("cannot build a grammar for the empty string");
    std::vector<Rule> rules;
    std::array<VarId, 256> term{};
    std::vector<VarId> level;
    level.reserve(text.size());
    for (const char c : text) {
        const auto b = static_cast<std::uint8_t>(c);
        if (term[b] == 0) {
            rules.push_back(Rule::terminal(b));
            term[b] = static_cast<VarId>(rules.size());
        }
        level.push_back(term[b]);
    }
    std::map<std::pair<VarId, VarId>, VarId> pairs;
    while (level.size() > 1) {
        std::vector<VarId> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < level.size(); k += 2) {
            auto [it, fresh] = pairs.try_emplace({level[k], level[k + 1]}, 0);
            if (fresh) {
                rules.push_back(Rule::concat(level[k], level[k + 1]));
                it->second = static_cast<VarId>(rules.size());
            }
            next.push_back(it->second);
        }
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return Slp::from_rules(std::move(rules), level.front());
}

Slp gen_power(std::string_view word, unsigned k) {
    if (word.empty()) throw SlpError("power base must be non-empty");
    if (k >= 63 || word.size() > (kMaxLength - 1) >> k) {
        throw TooLargeError("|word| * 2^" + std::to_string(k) + " reaches 2^63");
    }
    const Slp base = build_from_text(word);
    std::vector<Rule> squares;
    VarId cur = base.root();
    auto next = static_cast<VarId>(base.size() + 1);
    for (unsigned e = 0; e < k; ++e) {
        squares.push_back(Rule::concat(cur, cur));
        cur = next++;
    }
    return base.with_appended(squares, cur);
}

Slp gen_fibonacci(unsigned k) {
    if (k < 1) throw std::out_of_range("Fibonacci index must be at least 1");
    if (k > 87) throw TooLargeError("Fibonacci index " + std::to_string(k) + " exceeds 87");
    std::vector<Rule> rules{Rule::terminal('b')};
    if (k >= 2) rules.push_back(Rule::terminal('a'));
    for (VarId i = 3; i <= k; ++i) rules.push_back(Rule::concat(i - 1, i - 2));
    return Slp::from_rules(std::move(rules));
}

Slp gen_random(std::size_t n, std::uint64_t seed, const RandomSlpOptions& opts) {
    if (n == 0) throw SlpError("random grammar needs at least one rule");
    if (opts.alphabet.empty()) throw SlpError("random grammar needs a non-empty alphabet");
    const std::size_t sigma = std::min(n, opts.alphabet.size());
    if (n > sigma && opts.max_length < 2) throw SlpError("max length must be at least 2");

    const std::uint64_t max_len = std::min(opts.max_length, kMaxLength - 1);
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t m) { return static_cast<VarId>(1 + rng() % m); };

    std::vector<Rule> rules;
    std::vector<std::uint64_t> len;
    for (std::size_t t = 0; t < sigma; ++t) {
        rules.push_back(Rule::terminal(static_cast<std::uint8_t>(opts.alphabet[t])));
        len.push_back(1);
    }
    while (rules.size() < n) {
        const std::size_t m = rules.size();
        VarId l = 1, r = 1;
        bool found = false;
        for (int attempt = 0; attempt < 16 && !found; ++attempt) {
            // half the time extend the newest rule so the root grows deep
            l = (rng() & 1) ? static_cast<VarId>(m) : pick(m);
            r = pick(m);
            if (rng() & 1) std::swap(l, r);
            found = len[l - 1] + len[r - 1] <= max_len;
        }
        if (!found) l = r = pick(sigma);
        rules.push_back(Rule::concat(l, r));
        len.push_back(len[l - 1] + len[r - 1]);
    }
    return Slp::from_rules(std::move(rules));
}

} // namespace lyndon_slp
