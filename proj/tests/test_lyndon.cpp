#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lyndon_slp/factorization_io.hpp"
#include "lyndon_slp/lyndon.hpp"
#include "oracles.hpp"

using namespace lyndon_slp;
using fixtures::kDecompressLimit;

namespace {

LyndonFactorization from_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
    LyndonFactorization lf;
    for (auto [l, p] : pairs) lf.factors.push_back({l, p});
    return lf;
}

const VerifyCheck& check_named(const VerifyReport& r, std::string_view name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return c;
    }
    throw std::runtime_error("no check named " + std::string(name));
}

} // namespace

TEST_CASE("duval examples") {
    CHECK(duval("aababaababaab") == from_pairs({{5, 2}, {3, 1}}));
    CHECK(duval("aaaa") == from_pairs({{1, 4}}));
    CHECK(duval("cba") == from_pairs({{1, 1}, {1, 1}, {1, 1}}));
    CHECK(duval("ab") == from_pairs({{2, 1}}));
    CHECK(duval("\xff\x01") == from_pairs({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(duval(""), std::invalid_argument);
}

TEST_CASE("duval matches the smallest-suffix oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 3000; ++t) {
        const std::string w = oracle::random_string(rng, 1 + rng() % 40, t % 3 ? "ab" : "abc");
        REQUIRE(duval(w) == from_pairs(oracle::lyndon_by_smallest_suffix(w)));
    }
}

TEST_CASE("is_lyndon") {
    CHECK(is_lyndon("aab"));
    CHECK(is_lyndon("a"));
    CHECK_FALSE(is_lyndon("aba"));
    CHECK_FALSE(is_lyndon("aa"));
    CHECK_FALSE(is_lyndon(""));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 2000; ++t) {
        const std::string w = oracle::random_string(rng, 1 + rng() % 12, "abc");
        REQUIRE(is_lyndon(w) == oracle::is_lyndon(w));
    }
}

TEST_CASE("last_factor") {
    CHECK(last_factor(CandidateList({3, 13})) == 3);
    CHECK(last_factor(CandidateList({1})) == 1);
    CHECK_THROWS_AS(last_factor(CandidateList()), InvariantViolation);
}

TEST_CASE("shortest_period_of_power") {
    for (auto mode : {EngineMode::exact, EngineMode::fingerprint, EngineMode::both}) {
        const Slp s = build_from_text("aababaababxaab");
        const LcpEngine e(s, mode);
        CHECK(shortest_period_of_power(e, {s.root(), 1, 10}) == 5);
        CHECK(shortest_period_of_power(e, {s.root(), 12, 3}) == 3);

        const Slp ones = build_from_text(std::string(360, 'a'));
        CHECK(shortest_period_of_power(LcpEngine(ones, mode), {ones.root(), 1, 360}) == 1);
    }
    const Slp big = gen_power("aab", 40);
    const LcpEngine e(big, EngineMode::fingerprint);
    CHECK(shortest_period_of_power(e, {big.root(), 1, big.length()}) == 3);
    CHECK(shortest_period_of_power(e, {big.root(), 4, big.length() - 3}) == 3);

    // length with a large prime factor
    const std::uint64_t prime = 1'000'003;
    const Slp unary = build_from_text(std::string(prime, 'b'));
    CHECK(shortest_period_of_power(LcpEngine(unary, EngineMode::fingerprint), {unary.root(), 1, prime}) == 1);
    const Slp lyn = build_from_text(std::string(prime - 1, 'a') + "b");
    CHECK(shortest_period_of_power(LcpEngine(lyn, EngineMode::fingerprint), {lyn.root(), 1, prime}) == prime);
}

TEST_CASE("shortest_period_of_power agrees with a naive scan") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 300; ++t) {
        const std::string ell = oracle::random_lyndon(rng, 1 + rng() % 12, t % 2 ? "ab" : "abc");
        std::string block;
        const std::size_t p = 1 + rng() % 20;
        for (std::size_t i = 0; i < p; ++i) block += ell;
        const std::string text = oracle::random_string(rng, rng() % 5, "abc") + block;
        const Slp s = build_from_text(text);
        const LcpEngine e(s, EngineMode::both, rng());
        const std::uint64_t start = text.size() - block.size() + 1;
        REQUIRE(shortest_period_of_power(e, {s.root(), start, block.size()}) == oracle::smallest_period(block));
    }
}

TEST_CASE("factorize_slp examples") {
    for (auto mode : {EngineMode::exact, EngineMode::fingerprint, EngineMode::both}) {
        CHECK(factorize_slp(fixtures::example(), {mode}) == from_pairs({{5, 2}, {3, 1}}));
        CHECK(factorize_slp(gen_power("aab", 10), {mode}) == from_pairs({{3, 1024}}));
        CHECK(factorize_slp(build_from_text("ba"), {mode}) == from_pairs({{1, 1}, {1, 1}}));
        CHECK(factorize_slp(build_from_text("a"), {mode}) == from_pairs({{1, 1}}));
    }
    CHECK(factorize_slp(gen_power("aab", 40)) == from_pairs({{3, std::uint64_t{1} << 40}}));
}

TEST_CASE("factorize_slp equals duval on random inputs") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 400; ++t) {
        const std::string w = oracle::random_string(rng, 1 + rng() % 64, t % 2 ? "ab" : "abc");
        const Slp s = build_from_text(w);
        FactorizeStats stats;
        const auto lf = factorize_slp(s, {t % 3 == 0 ? EngineMode::both : EngineMode::fingerprint, rng()}, &stats);
        REQUIRE(lf == duval(w));
        REQUIRE(stats.lists_built >= s.size());
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Slp s = gen_random(20 + seed % 30, seed, {"abc", 5000});
        REQUIRE(factorize_slp(s, {EngineMode::both, seed}) == duval(s.decompress(kDecompressLimit)));
    }
}

TEST_CASE("factorize_slp on Fibonacci words") {
    const Slp f = gen_fibonacci(20);
    CHECK(factorize_slp(f) == duval(f.decompress(kDecompressLimit)));
    CHECK(factorize_slp(f, {EngineMode::exact}) == duval(f.decompress(kDecompressLimit)));
}

TEST_CASE("verify_factorization") {
    const Slp s = fixtures::example();
    const LcpEngine e(s, EngineMode::both);

    const auto good = verify_factorization(e, from_pairs({{5, 2}, {3, 1}}));
    CHECK(good.ok());
    CHECK(good.checks.size() == 4);

    const auto whole = verify_factorization(e, from_pairs({{13, 1}}));
    CHECK_FALSE(whole.ok());
    CHECK(check_named(whole, "total length").passed);
    CHECK_FALSE(check_named(whole, "Lyndon factors").passed);

    const Slp ab = build_from_text("ab");
    const auto split = verify_factorization(LcpEngine(ab, EngineMode::exact), from_pairs({{1, 1}, {1, 1}}));
    CHECK_FALSE(split.ok());
    CHECK_FALSE(check_named(split, "strictly descending factors").passed);

    const auto short_cover = verify_factorization(e, from_pairs({{5, 2}}));
    CHECK_FALSE(short_cover.ok());
    CHECK(short_cover.checks.size() == 1);

    const auto bad_period = verify_factorization(e, from_pairs({{4, 2}, {5, 1}}));
    CHECK_FALSE(check_named(bad_period, "block periods").passed);

    CHECK_FALSE(verify_factorization(e, from_pairs({{0, 3}, {13, 1}})).ok());
    CHECK_FALSE(verify_factorization(e, from_pairs({{~std::uint64_t{0}, 2}})).ok());

    const Slp big = gen_power("aab", 40);
    const LcpEngine be(big, EngineMode::fingerprint);
    const auto br = verify_factorization(be, from_pairs({{3, std::uint64_t{1} << 40}}));
    CHECK(br.ok());
    CHECK(br.lyndon_assumed == 0);
    const auto assumed = verify_factorization(be, from_pairs({{3, std::uint64_t{1} << 40}}), 2);
    CHECK(assumed.ok());
    CHECK(assumed.lyndon_assumed == 1);
    CHECK(check_named(assumed, "Lyndon factors").detail.find("assumed") != std::string::npos);
}

TEST_CASE("factorization text and JSON formats") {
    const auto lf = from_pairs({{5, 2}, {3, 1}});
    CHECK(format_factorization_text(lf, 7, 13) == "n=7\nN=13\nm=2\n5 2\n3 1\n");
    CHECK(format_factorization_json(lf, 7, 13) ==
          "{\"n\":\"7\",\"N\":\"13\",\"m\":\"2\",\"factors\":[[\"5\",\"2\"],[\"3\",\"1\"]]}\n");

    const auto big = from_pairs({{3, std::uint64_t{1} << 60}, {1, 9007199254740993ULL}});
    CHECK(parse_factorization(format_factorization_json(big, 1, 2)) == big);
    CHECK(parse_factorization(format_factorization_text(big, 1, 2)) == big);
    CHECK(parse_factorization("# comment\n13 1\n") == from_pairs({{13, 1}}));
    CHECK_THROWS_AS(parse_factorization("13\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factorization("13 1 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factorization("x 1\n"), std::invalid_argument);
}
