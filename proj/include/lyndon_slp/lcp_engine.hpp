#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "lyndon_slp/slp.hpp"

namespace lyndon_slp {

enum class EngineMode { exact, fingerprint, both };

std::string_view to_string(EngineMode m);
/// Accepts "exact", "fingerprint" and "both".
EngineMode parse_engine_mode(std::string_view s);

inline constexpr std::uint64_t kDefaultSeed = 0x1F2E3D4C5B6A7988ULL;

/// Thrown in cross-check mode when the two lcp routes disagree.
class EngineDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Karp-Rabin polynomial hash over GF(2^61 - 1).
struct Fingerprint {
    std::uint64_t hash = 0;
    std::uint64_t power = 1; ///< base^length

    friend constexpr bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Longest-common-prefix queries between spans of one grammar's expansion.
///
/// `exact` walks both spans character by character (skipping subtrees that
/// are the same variable at the same alignment). `fingerprint` binary-searches
/// the lcp length using two independent Karp-Rabin fields and is Monte Carlo.
/// `both` runs the two and throws EngineDisagreement on any mismatch.
///
/// The engine keeps a reference to `slp`, which must outlive it. Queries are
/// const and thread-safe.
class LcpEngine {
public:
    static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

    LcpEngine(const Slp& slp, EngineMode mode, std::uint64_t seed = kDefaultSeed);

    const Slp& slp() const { return *slp_; }
    EngineMode mode() const { return mode_; }

    std::uint64_t lcp(const Span& a, const Span& b) const;
    bool equal(const Span& a, const Span& b) const;
    std::strong_ordering compare(const Span& a, const Span& b) const;

    /// lcp(val(xi)[k..|xi|], val(xj)), truncated to the available suffix.
    std::uint64_t fm(VarId xi, VarId xj, std::uint64_t k) const;

    /// Per-variable fingerprints of the full expansion; empty in exact mode.
    const std::vector<Fingerprint>& table(int field) const { return tables_[field]; }
    std::uint64_t base(int field) const { return bases_[field]; }

    /// Fingerprint of a span in the given field (fingerprint/both modes only).
    Fingerprint fingerprint(const Span& s, int field) const;

private:
    std::uint64_t lcp_exact(const Span& a, const Span& b) const;
    std::uint64_t lcp_fingerprint(const Span& a, const Span& b) const;
    bool equal_fingerprint(const Span& a, const Span& b) const;

    const Slp* slp_;
    EngineMode mode_;
    std::array<std::uint64_t, 2> bases_{};
    std::array<std::vector<Fingerprint>, 2> tables_;
};

} // namespace lyndon_slp
