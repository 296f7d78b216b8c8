#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lyndon_slp/lcp_engine.hpp"
#include "lyndon_slp/slp.hpp"

namespace lyndon_slp {

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// One factor group l^p of a Lyndon factorization.
struct LyndonFactor {
    std::uint64_t factor_len = 0;
    std::uint64_t power = 0;

    friend constexpr bool operator==(const LyndonFactor&, const LyndonFactor&) = default;
};

/// l_1^p_1 ... l_m^p_m, left to right, as (|l_i|, p_i) pairs.
struct LyndonFactorization {
    std::vector<LyndonFactor> factors;

    std::size_t size() const { return factors.size(); }
    /// Sum of |l_i| * p_i; throws std::overflow_error past 2^64.
    std::uint64_t total_length() const;

    friend bool operator==(const LyndonFactorization&, const LyndonFactorization&) = default;
};

/// Lengths of the suffixes of one variable's expansion that can still become
/// the smallest suffix after some right extension, ascending.
///
/// Consecutive lengths more than double and every shorter suffix is a prefix
/// of every longer one, so a list over a string of length N has at most
/// floor(log2 N) + 1 entries.
class CandidateList {
public:
    CandidateList() = default;
    explicit CandidateList(std::vector<std::uint64_t> lengths) : lengths_(std::move(lengths)) {}

    const std::vector<std::uint64_t>& lengths() const { return lengths_; }
    std::size_t size() const { return lengths_.size(); }
    bool empty() const { return lengths_.empty(); }
    std::uint64_t shortest() const { return lengths_.front(); }
    std::uint64_t longest() const { return lengths_.back(); }

    /// Ascending, within [1, var_len], doubling gap, size bound. Throws InvariantViolation.
    void check(std::uint64_t var_len) const;

    friend bool operator==(const CandidateList&, const CandidateList&) = default;

private:
    std::vector<std::uint64_t> lengths_;
};

/// Which branch of the merge step fired for one left candidate.
enum class MergeCase {
    smaller_at_mismatch,  ///< (a) extended candidate wins at the mismatch; longer entries dropped
    larger_at_mismatch,   ///< (b) extended candidate loses; no change
    periodic_replace,     ///< (c) longest entry is a prefix and |cur| <= 2|d|: replace it
    extend,               ///< (d) longest entry is a prefix and |cur| > 2|d|: append
};

std::string_view to_string(MergeCase c);

/// Classic constant-space Duval factorization of an uncompressed string.
LyndonFactorization duval(std::string_view text);

/// True iff `text` is a Lyndon word (non-empty, strictly smaller than all proper suffixes).
bool is_lyndon(std::string_view text);

CandidateList lfcand_leaf(std::uint8_t b);

/// Candidate list of xi = xl xr from the lists of its children.
CandidateList lfcand_merge(const LcpEngine& engine, VarId xi, const CandidateList& cand_l,
                           const CandidateList& cand_r, std::vector<MergeCase>* trace = nullptr);

/// Candidate lists for every variable, indexed by VarId.
class CandidateTable {
public:
    const CandidateList& operator[](VarId v) const { return lists_[v - 1]; }
    std::size_t size() const { return lists_.size(); }
    void push_back(CandidateList c) { lists_.push_back(std::move(c)); }

private:
    std::vector<CandidateList> lists_;
};

/// Optional instrumentation for candidate-list construction.
struct CandidateObserver {
    std::function<void(VarId, std::uint64_t var_len, const CandidateList&)> on_list;
};

CandidateTable lfcand_all(const LcpEngine& engine, const CandidateObserver* observer = nullptr);

/// Brute-force candidate set of `text` (|text| <= 16) by searching right extensions
/// over the text's letters plus 0x00 and 0xFF, up to `max_witness` characters
/// (default |text| + 1).
std::set<std::uint64_t> lfcand_oracle(std::string_view text, std::size_t max_witness = 0);

/// Total length p * |l| of the last factor group: the shortest candidate.
std::uint64_t last_factor(const CandidateList& cand);

/// Shortest period of a block known to be l^p with l Lyndon.
std::uint64_t shortest_period_of_power(const LcpEngine& engine, const Span& block);

struct FactorizeOptions {
    EngineMode mode = EngineMode::fingerprint;
    std::uint64_t seed = kDefaultSeed;
    const CandidateObserver* observer = nullptr;
};

struct FactorizeStats {
    std::size_t lists_built = 0;
    std::size_t max_list_size = 0;
    std::size_t chain_rules = 0;
};

LyndonFactorization factorize_slp(const Slp& slp, const FactorizeOptions& opts = {},
                                  FactorizeStats* stats = nullptr);

struct VerifyCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    std::size_t lyndon_assumed = 0; ///< factors too long for the decompressing Lyndon check

    bool ok() const;
};

/// Compressed-space verification: total length, per-block periodicity, strict
/// descending order of adjacent factors, and Lyndon-ness of every factor not
/// longer than `lyndon_bound`.
VerifyReport verify_factorization(const LcpEngine& engine, const LyndonFactorization& lf,
                                  std::uint64_t lyndon_bound = std::uint64_t{1} << 20);

} // namespace lyndon_slp
