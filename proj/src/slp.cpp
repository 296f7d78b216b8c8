#include "lyndon_slp/slp.hpp"

#include <algorithm>

namespace lyndon_slp {

void Slp::append_checked(const Rule& r, std::size_t line) {
    const auto self = static_cast<VarId>(rules_.size() + 1);
    if (r.is_terminal()) {
        if (r.right != 0) throw ParseError(line, "malformed terminal rule X" + std::to_string(self));
        rules_.push_back(r);
        len_.push_back(1);
        height_.push_back(0);
        return;
    }
    if (r.left >= self || r.right >= self || r.right == 0) {
        throw ParseError(line, "rule X" + std::to_string(self) + " references X" +
                                   std::to_string(std::max(r.left, r.right)) +
                                   " which is not an earlier variable");
    }
    const std::uint64_t a = len_[r.left - 1];
    const std::uint64_t b = len_[r.right - 1];
    if (a >= kMaxLength - b) {
        throw TooLargeError("rule X" + std::to_string(self) + " derives 2^63 or more characters");
    }
    rules_.push_back(r);
    len_.push_back(a + b);
    height_.push_back(1 + std::max(height_[r.left - 1], height_[r.right - 1]));
}

Slp Slp::from_rules(std::vector<Rule> rules, std::optional<VarId> root) {
    if (rules.empty()) throw SlpError("empty program");
    Slp s;
    s.rules_.reserve(rules.size());
    s.len_.reserve(rules.size());
    s.height_.reserve(rules.size());
    for (const auto& r : rules) s.append_checked(r);
    const VarId rt = root.value_or(static_cast<VarId>(s.rules_.size()));
    if (!s.contains(rt)) throw SlpError("root X" + std::to_string(rt) + " does not exist");
    s.root_ = rt;
    return s;
}

Slp Slp::with_appended(std::span<const Rule> extra, std::optional<VarId> root) const {
    Slp s = *this;
    for (const auto& r : extra) s.append_checked(r);
    const VarId rt = root.value_or(static_cast<VarId>(s.rules_.size()));
    if (!s.contains(rt)) throw SlpError("root X" + std::to_string(rt) + " does not exist");
    s.root_ = rt;
    return s;
}

bool Slp::valid(const Span& s) const {
    if (!contains(s.var) || s.start < 1) return false;
    const std::uint64_t n = length(s.var);
    return s.start <= n + 1 && s.len <= n + 1 - s.start;
}

void Slp::check(const Span& s) const {
    if (!valid(s)) {
        throw std::out_of_range("span (X" + std::to_string(s.var) + ", " + std::to_string(s.start) +
                                ", " + std::to_string(s.len) + ") is out of range");
    }
}

std::uint8_t Slp::char_at(VarId v, std::uint64_t pos) const {
    if (!contains(v) || pos < 1 || pos > length(v)) {
        throw std::out_of_range("position " + std::to_string(pos) + " outside X" + std::to_string(v));
    }
    for (;;) {
        const Rule& r = rule(v);
        if (r.is_terminal()) return r.byte;
        const std::uint64_t left_len = length(r.left);
        if (pos <= left_len) {
            v = r.left;
        } else {
            pos -= left_len;
            v = r.right;
        }
    }
}

std::string Slp::decompress(std::uint64_t limit) const {
    return expand(Span{root_, 1, length()}, limit);
}

std::string Slp::expand(const Span& s, std::uint64_t limit) const {
    check(s);
    if (s.len > limit) {
        throw TooLargeError("expansion of " + std::to_string(s.len) + " characters exceeds limit " +
                            std::to_string(limit));
    }
    std::string out;
    out.reserve(s.len);
    // (variable, offset of its first character within val(s.var), 0-based)
    std::vector<std::pair<VarId, std::uint64_t>> stack{{s.var, 0}};
    const std::uint64_t lo = s.start - 1;
    const std::uint64_t hi = lo + s.len;
    while (!stack.empty() && out.size() < s.len) {
        auto [v, off] = stack.back();
        stack.pop_back();
        const std::uint64_t end = off + length(v);
        if (end <= lo || off >= hi) continue;
        const Rule& r = rule(v);
        if (r.is_terminal()) {
            out.push_back(static_cast<char>(r.byte));
            continue;
        }
        stack.emplace_back(r.right, off + length(r.left));
        stack.emplace_back(r.left, off);
    }
    return out;
}

} // namespace lyndon_slp
