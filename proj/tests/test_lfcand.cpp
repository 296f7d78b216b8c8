#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "fixtures.hpp"
#include "lyndon_slp/lyndon.hpp"
#include "oracles.hpp"

using namespace lyndon_slp;
using fixtures::kDecompressLimit;

namespace {

std::set<std::uint64_t> as_set(const CandidateList& c) { return {c.lengths().begin(), c.lengths().end()}; }

// all strings over {a,b} of a given length
std::vector<std::string> binary_strings(std::size_t len) {
    std::vector<std::string> out;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        std::string s(len, 'a');
        for (std::size_t i = 0; i < len; ++i) {
            if (mask >> i & 1) s[i] = 'b';
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

TEST_CASE("leaf lists") {
    CHECK(lfcand_leaf('a') == CandidateList({1}));
    CHECK(lfcand_leaf(0).lengths() == std::vector<std::uint64_t>{1});
}

TEST_CASE("candidate list invariants are enforced") {
    CHECK_NOTHROW(CandidateList({1, 3, 7}).check(13));
    CHECK_THROWS_AS(CandidateList().check(3), InvariantViolation);
    CHECK_THROWS_AS(CandidateList({3, 5}).check(13), InvariantViolation);
    CHECK_THROWS_AS(CandidateList({3, 2}).check(13), InvariantViolation);
    CHECK_THROWS_AS(CandidateList({3, 14}).check(13), InvariantViolation);
    CHECK_THROWS_AS(CandidateList({0}).check(13), InvariantViolation);
}

TEST_CASE("merge on the derivation-tree example") {
    const Slp s = fixtures::example();
    for (auto mode : {EngineMode::exact, EngineMode::fingerprint}) {
        const LcpEngine e(s, mode);
        const CandidateTable t = lfcand_all(e);
        REQUIRE(t.size() == 7);
        CHECK(t[3] == CandidateList({2}));
        CHECK(t[4] == CandidateList({3}));
        CHECK(t[5] == CandidateList({3}));
        CHECK(t[6] == CandidateList({3, 8}));
        CHECK(t[7] == CandidateList({3, 13}));

        std::vector<MergeCase> trace;
        CHECK(lfcand_merge(e, 7, t[6], t[5], &trace) == CandidateList({3, 13}));
        REQUIRE(trace.size() == 2);
        CHECK(trace[0] == MergeCase::extend);
        CHECK(trace[1] == MergeCase::periodic_replace);
        CHECK(last_factor(t[7]) == 3);
    }
}

TEST_CASE("merge cases on small words") {
    const CandidateList one({1});
    std::vector<MergeCase> trace;
    const Slp aa = build_from_text("aa");
    CHECK(lfcand_merge(LcpEngine(aa, EngineMode::exact), aa.root(), one, one, &trace) == CandidateList({2}));
    CHECK(trace == std::vector<MergeCase>{MergeCase::periodic_replace});

    trace.clear();
    const Slp ba = build_from_text("ba");
    CHECK(lfcand_merge(LcpEngine(ba, EngineMode::exact), ba.root(), one, one, &trace) == CandidateList({1}));
    CHECK(trace == std::vector<MergeCase>{MergeCase::larger_at_mismatch});

    trace.clear();
    const Slp ab = build_from_text("ab");
    CHECK(lfcand_merge(LcpEngine(ab, EngineMode::exact), ab.root(), one, one, &trace) == CandidateList({2}));
    CHECK(trace == std::vector<MergeCase>{MergeCase::smaller_at_mismatch});

    // "a" from the right child is dominated by the longer run
    const Slp aaa = parse_slp("1 = chr 97\n2 = 1 1\n3 = 2 1\n");
    CHECK(lfcand_all(LcpEngine(aaa, EngineMode::exact))[3] == CandidateList({3}));

    for (const char* w : {"babab", "aaa", "aaaaaaa", "abaab", "aababaab", "aaaa", "abab", "ab"}) {
        const Slp s = build_from_text(w);
        CHECK(as_set(lfcand_all(LcpEngine(s, EngineMode::exact))[s.root()]) == lfcand_oracle(w));
    }
}

TEST_CASE("brute-force candidate oracle") {
    CHECK(lfcand_oracle("abaab") == std::set<std::uint64_t>{3});
    CHECK(lfcand_oracle("a") == std::set<std::uint64_t>{1});
    CHECK(lfcand_oracle("aababaab") == std::set<std::uint64_t>{3, 8});
    CHECK(lfcand_oracle("ba") == std::set<std::uint64_t>{1});
    CHECK(lfcand_oracle("aa") == std::set<std::uint64_t>{2});
    CHECK(lfcand_oracle("aaa") == std::set<std::uint64_t>{3});
    CHECK_THROWS_AS(lfcand_oracle(""), std::invalid_argument);
    CHECK_THROWS_AS(lfcand_oracle(std::string(17, 'a')), std::invalid_argument);
}

TEST_CASE("oracle witness bound is not the limiting factor") {
    for (std::size_t len = 1; len <= 7; ++len) {
        for (const auto& w : binary_strings(len)) {
            REQUIRE(lfcand_oracle(w) == lfcand_oracle(w, 2 * w.size()));
        }
    }
}

TEST_CASE("lists contain every oracle candidate and agree on the shortest") {
    std::size_t exact_matches = 0, total = 0;
    for (std::size_t len = 1; len <= 9; ++len) {
        for (const auto& w : binary_strings(len)) {
            const Slp s = build_from_text(w);
            const CandidateList list = lfcand_all(LcpEngine(s, EngineMode::exact))[s.root()];
            const auto oracle_set = lfcand_oracle(w);
            CAPTURE(w);
            REQUIRE(std::includes(list.lengths().begin(), list.lengths().end(), oracle_set.begin(),
                                  oracle_set.end()));
            REQUIRE(list.shortest() == *oracle_set.begin());
            exact_matches += as_set(list) == oracle_set;
            ++total;
        }
    }
    MESSAGE("exact set equality on " << exact_matches << " of " << total << " binary strings");
}

TEST_CASE("shortest candidate is the last Lyndon factor group") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const std::string w = oracle::random_string(rng, 1 + rng() % 60, t % 2 ? "ab" : "abc");
        const Slp s = build_from_text(w);
        const CandidateTable table = lfcand_all(LcpEngine(s, EngineMode::fingerprint, rng()));
        const auto f = duval(w).factors.back();
        REQUIRE(last_factor(table[s.root()]) == f.factor_len * f.power);
    }
}

TEST_CASE("every list is a prefix chain with the size bound") {
    std::mt19937_64 rng(11);
    for (int g = 0; g < 40; ++g) {
        const Slp s = gen_random(10 + rng() % 60, rng(), {g % 2 ? "ab" : "abc", 100'000});
        const LcpEngine e(s, EngineMode::both, rng());
        std::size_t seen = 0;
        CandidateObserver obs{[&](VarId v, std::uint64_t len, const CandidateList& c) {
            ++seen;
            REQUIRE(len == s.length(v));
            REQUIRE(c.size() <= static_cast<std::size_t>(std::bit_width(len)));
            const auto& l = c.lengths();
            for (std::size_t j = 1; j < l.size(); ++j) {
                REQUIRE(l[j] - l[j - 1] > l[j - 1]);
                // the shorter suffix is a prefix of the longer one
                REQUIRE(e.lcp({v, len - l[j - 1] + 1, l[j - 1]}, {v, len - l[j] + 1, l[j]}) == l[j - 1]);
            }
        }};
        lfcand_all(e, &obs);
        REQUIRE(seen == s.size());
    }
}

TEST_CASE("lists on random grammars match the oracle on short variables") {
    std::mt19937_64 rng(21);
    for (int g = 0; g < 30; ++g) {
        const Slp s = gen_random(8 + rng() % 20, rng(), {"abc", 16});
        const CandidateTable t = lfcand_all(LcpEngine(s, EngineMode::exact));
        for (VarId v = 1; v <= s.size(); ++v) {
            const std::string w = s.expand({v, 1, s.length(v)}, kDecompressLimit);
            const auto o = lfcand_oracle(w);
            REQUIRE(std::includes(t[v].lengths().begin(), t[v].lengths().end(), o.begin(), o.end()));
            REQUIRE(t[v].shortest() == *o.begin());
        }
    }
}
