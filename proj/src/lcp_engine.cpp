#include "lyndon_slp/lcp_engine.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace lyndon_slp {
namespace {

constexpr std::uint64_t kMod = LcpEngine::kModulus;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = (static_cast<std::uint64_t>(p) & kMod) + static_cast<std::uint64_t>(p >> 61);
    return r >= kMod ? r - kMod : r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t r = a + b;
    return r >= kMod ? r - kMod : r;
}

Fingerprint combine(const Fingerprint& x, const Fingerprint& y) {
    return {add_mod(mul_mod(x.hash, y.power), y.hash), mul_mod(x.power, y.power)};
}

// Fingerprint of val(v)[lo, hi) (0-based, half open).
Fingerprint range_fp(const Slp& slp, const std::vector<Fingerprint>& table, VarId v, std::uint64_t lo,
                     std::uint64_t hi) {
    if (lo == hi) return {};
    for (;;) {
        if (lo == 0 && hi == slp.length(v)) return table[v - 1];
        const Rule& r = slp.rule(v);
        const std::uint64_t mid = slp.length(r.left);
        if (hi <= mid) {
            v = r.left;
        } else if (lo >= mid) {
            lo -= mid;
            hi -= mid;
            v = r.right;
        } else {
            return combine(range_fp(slp, table, r.left, lo, mid), range_fp(slp, table, r.right, 0, hi - mid));
        }
    }
}

// Pending subtrees of a span in left-to-right order (top of stack = next).
class SpanCursor {
public:
    SpanCursor(const Slp& slp, const Span& s) : slp_(slp), remaining_(s.len) {
        if (s.len == 0) return;
        VarId v = s.var;
        std::uint64_t pos = s.start;
        while (pos != 1) {
            const Rule& r = slp.rule(v);
            const std::uint64_t left_len = slp.length(r.left);
            if (pos > left_len) {
                pos -= left_len;
                v = r.right;
            } else {
                stack_.push_back(r.right);
                v = r.left;
            }
        }
        stack_.push_back(v);
    }

    std::uint64_t remaining() const { return remaining_; }
    VarId top() const { return stack_.back(); }
    std::uint64_t top_len() const { return slp_.length(stack_.back()); }

    void skip_top() {
        remaining_ -= top_len();
        stack_.pop_back();
    }
    void expand_top() {
        const Rule r = slp_.rule(stack_.back());
        stack_.back() = r.right;
        stack_.push_back(r.left);
    }
    std::uint8_t top_byte() const { return slp_.rule(stack_.back()).byte; }

private:
    const Slp& slp_;
    std::vector<VarId> stack_;
    std::uint64_t remaining_;
};

} // namespace

std::string_view to_string(EngineMode m) {
    switch (m) {
    case EngineMode::exact: return "exact";
    case EngineMode::fingerprint: return "fingerprint";
    case EngineMode::both: return "both";
    }
    return "?";
}

EngineMode parse_engine_mode(std::string_view s) {
    if (s == "exact") return EngineMode::exact;
    if (s == "fingerprint") return EngineMode::fingerprint;
    if (s == "both") return EngineMode::both;
    throw std::invalid_argument("unknown engine mode '" + std::string(s) + "'");
}

LcpEngine::LcpEngine(const Slp& slp, EngineMode mode, std::uint64_t seed) : slp_(&slp), mode_(mode) {
    if (mode == EngineMode::exact) return;
    std::mt19937_64 rng(seed);
    for (auto& b : bases_) b = 2 + rng() % (kMod - 3);
    for (int f = 0; f < 2; ++f) {
        auto& t = tables_[f];
        t.reserve(slp.size());
        for (const Rule& r : slp.rules()) {
            if (r.is_terminal()) {
                t.push_back({std::uint64_t{r.byte} + 1, bases_[f]});
            } else {
                t.push_back(combine(t[r.left - 1], t[r.right - 1]));
            }
        }
    }
}

Fingerprint LcpEngine::fingerprint(const Span& s, int field) const {
    if (tables_[field].empty()) throw std::logic_error("fingerprint tables are not built in exact mode");
    slp_->check(s);
    return range_fp(*slp_, tables_[field], s.var, s.start - 1, s.start - 1 + s.len);
}

bool LcpEngine::equal_fingerprint(const Span& a, const Span& b) const {
    if (a.len != b.len) return false;
    for (int f = 0; f < 2; ++f) {
        const auto& t = tables_[f];
        if (range_fp(*slp_, t, a.var, a.start - 1, a.start - 1 + a.len) !=
            range_fp(*slp_, t, b.var, b.start - 1, b.start - 1 + b.len)) {
            return false;
        }
    }
    return true;
}

std::uint64_t LcpEngine::lcp_fingerprint(const Span& a, const Span& b) const {
    const std::uint64_t n = std::min(a.len, b.len);
    if (n == 0) return 0;
    if (slp_->char_at(a.var, a.start) != slp_->char_at(b.var, b.start)) return 0;
    auto eq = [&](std::uint64_t t) { return equal_fingerprint({a.var, a.start, t}, {b.var, b.start, t}); };
    if (eq(n)) return n;
    // invariant: prefixes of length lo agree, of length hi differ
    std::uint64_t lo = 1, hi = n;
    for (std::uint64_t probe = 2; probe < n; probe *= 2) {
        if (!eq(probe)) {
            hi = probe;
            break;
        }
        lo = probe;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (eq(mid) ? lo : hi) = mid;
    }
    return lo;
}

std::uint64_t LcpEngine::lcp_exact(const Span& a, const Span& b) const {
    SpanCursor x(*slp_, a), y(*slp_, b);
    std::uint64_t matched = 0;
    while (x.remaining() > 0 && y.remaining() > 0) {
        const std::uint64_t lx = x.top_len(), ly = y.top_len();
        if (x.top() == y.top() && lx <= std::min(x.remaining(), y.remaining())) {
            matched += lx;
            x.skip_top();
            y.skip_top();
        } else if (lx == 1 && ly == 1) {
            if (x.top_byte() != y.top_byte()) break;
            ++matched;
            x.skip_top();
            y.skip_top();
        } else if (lx >= ly && lx > 1) {
            x.expand_top();
        } else {
            y.expand_top();
        }
    }
    return matched;
}

std::uint64_t LcpEngine::lcp(const Span& a, const Span& b) const {
    slp_->check(a);
    slp_->check(b);
    switch (mode_) {
    case EngineMode::exact: return lcp_exact(a, b);
    case EngineMode::fingerprint: return lcp_fingerprint(a, b);
    case EngineMode::both: break;
    }
    const std::uint64_t e = lcp_exact(a, b);
    const std::uint64_t f = lcp_fingerprint(a, b);
    if (e != f) {
        throw EngineDisagreement("lcp engines disagree: exact " + std::to_string(e) + ", fingerprint " +
                                 std::to_string(f));
    }
    return e;
}

bool LcpEngine::equal(const Span& a, const Span& b) const {
    slp_->check(a);
    slp_->check(b);
    if (a.len != b.len) return false;
    switch (mode_) {
    case EngineMode::exact: return lcp_exact(a, b) == a.len;
    case EngineMode::fingerprint: return equal_fingerprint(a, b);
    case EngineMode::both: break;
    }
    const bool e = lcp_exact(a, b) == a.len;
    if (e != equal_fingerprint(a, b)) throw EngineDisagreement("equality engines disagree");
    return e;
}

std::strong_ordering LcpEngine::compare(const Span& a, const Span& b) const {
    const std::uint64_t h = lcp(a, b);
    if (h == a.len || h == b.len) return a.len <=> b.len;
    return slp_->char_at(a.var, a.start + h) <=> slp_->char_at(b.var, b.start + h);
}

std::uint64_t LcpEngine::fm(VarId xi, VarId xj, std::uint64_t k) const {
    if (!slp_->contains(xi) || !slp_->contains(xj) || k < 1 || k > slp_->length(xi)) {
        throw std::out_of_range("fm query position " + std::to_string(k) + " outside X" + std::to_string(xi));
    }
    return lcp({xi, k, slp_->length(xi) - k + 1}, {xj, 1, slp_->length(xj)});
}

} // namespace lyndon_slp
