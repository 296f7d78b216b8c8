#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lyndon_slp {

/// 1-based variable index (X_1 .. X_n). 0 is never a valid variable.
using VarId = std::uint32_t;

/// Expansions of 2^63 characters or more are rejected everywhere.
inline constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 63;

class SlpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in .slp text; `line()` is 1-based, 0 if not tied to a line.
class ParseError : public SlpError {
public:
    ParseError(std::size_t line, const std::string& what)
        : SlpError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class TooLargeError : public SlpError {
public:
    using SlpError::SlpError;
};

/// Either a terminal byte or the concatenation of two earlier variables.
struct Rule {
    VarId left = 0;
    VarId right = 0;
    std::uint8_t byte = 0;

    static constexpr Rule terminal(std::uint8_t b) { return Rule{0, 0, b}; }
    static constexpr Rule concat(VarId l, VarId r) { return Rule{l, r, 0}; }

    constexpr bool is_terminal() const { return left == 0; }
    friend constexpr bool operator==(const Rule&, const Rule&) = default;
};

/// A substring val(var)[start .. start+len-1]; start is 1-based, len may be 0.
struct Span {
    VarId var = 0;
    std::uint64_t start = 1;
    std::uint64_t len = 0;

    friend constexpr bool operator==(const Span&, const Span&) = default;
};

/// Straight-line program: an immutable, validated grammar deriving one string.
///
/// Per-variable expansion lengths and derivation-tree heights are computed at
/// construction, so random access costs O(height) rather than O(N).
class Slp {
public:
    /// Validates `rules` (acyclic, in range, no overflow). `root` defaults to the last rule.
    static Slp from_rules(std::vector<Rule> rules, std::optional<VarId> root = std::nullopt);

    /// Copy of this grammar with `extra` appended after the existing rules.
    Slp with_appended(std::span<const Rule> extra, std::optional<VarId> root = std::nullopt) const;

    std::size_t size() const { return rules_.size(); }
    VarId root() const { return root_; }
    std::span<const Rule> rules() const { return rules_; }
    const Rule& rule(VarId v) const { return rules_[v - 1]; }

    std::uint64_t length() const { return length(root_); }
    std::uint64_t length(VarId v) const { return len_[v - 1]; }
    std::uint32_t height() const { return height(root_); }
    std::uint32_t height(VarId v) const { return height_[v - 1]; }

    bool contains(VarId v) const { return v >= 1 && v <= rules_.size(); }
    bool valid(const Span& s) const;
    /// Throws std::out_of_range for spans outside their variable.
    void check(const Span& s) const;

    /// val(root)[pos], 1-based.
    std::uint8_t char_at(std::uint64_t pos) const { return char_at(root_, pos); }
    std::uint8_t char_at(VarId v, std::uint64_t pos) const;

    /// Full expansion of the root; throws TooLargeError when N > limit.
    std::string decompress(std::uint64_t limit) const;
    /// Expansion of an arbitrary span; throws TooLargeError when s.len > limit.
    std::string expand(const Span& s, std::uint64_t limit) const;

    friend bool operator==(const Slp& a, const Slp& b) {
        return a.root_ == b.root_ && a.rules_ == b.rules_;
    }

private:
    Slp() = default;
    void append_checked(const Rule& r, std::size_t line = 0);

    std::vector<Rule> rules_;
    std::vector<std::uint64_t> len_;
    std::vector<std::uint32_t> height_;
    VarId root_ = 0;
};

// .slp text format

Slp parse_slp(std::string_view text);
std::string serialize_slp(const Slp& slp);

// Structural operations

/// Grammar deriving val(root)[i..j]: all original rules kept with the same
/// indices, at most 4*(height+1) concat rules appended, root set to the slice.
Slp slice_slp(const Slp& slp, std::uint64_t i, std::uint64_t j);

/// Decomposition of val(root)[1..R] into existing variables, plus a left-leaning
/// chain Y_k = Y_{k-1} V_k appended to a copy of the grammar.
struct PrefixSpine {
    std::vector<VarId> parts;  ///< V_1..V_t, left to right
    Slp slp;                   ///< original rules + t-1 chain rules; root derives the prefix
    std::size_t base_size = 0; ///< rule count before the chain

    VarId chain_root() const { return slp.root(); }
};

PrefixSpine prefix_spine(const Slp& slp, std::uint64_t prefix_len);

// Generators

/// word^(2^k) by repeated squaring.
Slp gen_power(std::string_view word, unsigned k);

/// F_1 = "b", F_2 = "a", F_i = F_{i-1} F_{i-2}; root F_k. Valid for 1 <= k <= 87.
Slp gen_fibonacci(unsigned k);

struct RandomSlpOptions {
    std::string alphabet = "ab";
    std::uint64_t max_length = 1'000'000;
};

/// `n` rules drawn from a seeded generator; deterministic across platforms.
Slp gen_random(std::size_t n, std::uint64_t seed, const RandomSlpOptions& opts = {});

/// Balanced binary parse of `text` (height <= ceil(log2 |text|)); identical pairs share a rule.
Slp build_from_text(std::string_view text);

} // namespace lyndon_slp
