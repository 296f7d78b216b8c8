#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "lyndon_slp/factorization_io.hpp"
#include "lyndon_slp/lyndon.hpp"

namespace lyndon_slp::cli {
namespace {

enum class InputKind { slp, raw };

struct CliConfig {
    std::string input = "-";
    InputKind input_kind = InputKind::slp;
    EngineMode engine = EngineMode::fingerprint;
    std::uint64_t seed = kDefaultSeed;
    bool seed_given = false;
    bool json = false;
    std::uint64_t max_decompress = 1'000'000;
};

std::string read_all(std::istream& s) {
    return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return read_all(in);
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    return read_all(f);
}

Slp load_grammar(const CliConfig& cfg, std::istream& in) {
    const std::string text = read_input(cfg.input, in);
    return cfg.input_kind == InputKind::raw ? build_from_text(text) : parse_slp(text);
}

std::uint64_t resolve_seed(const CliConfig& cfg) {
    if (cfg.seed_given) return cfg.seed;
    if (const char* env = std::getenv("LYNDON_SEED"); env && *env) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) {
            throw std::invalid_argument("LYNDON_SEED is not an unsigned 64-bit integer");
        }
        return v;
    }
    return kDefaultSeed;
}

void add_engine_options(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option_function<std::string>(
           "--engine", [&cfg](const std::string& m) { cfg.engine = parse_engine_mode(m); }, "lcp engine")
        ->check(CLI::IsMember({"exact", "fingerprint", "both"}));
    cmd.add_option_function<std::uint64_t>(
        "--seed",
        [&cfg](const std::uint64_t& s) {
            cfg.seed = s;
            cfg.seed_given = true;
        },
        "fingerprint seed (overrides LYNDON_SEED)");
}

void add_input_kind_option(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option_function<std::string>(
           "--input-kind",
           [&cfg](const std::string& k) { cfg.input_kind = k == "raw" ? InputKind::raw : InputKind::slp; },
           "input format")
        ->check(CLI::IsMember({"slp", "raw"}));
}

void add_input_options(CLI::App& cmd, CliConfig& cfg) {
    cmd.add_option("input", cfg.input, "grammar file, or - for standard input");
    add_input_kind_option(cmd, cfg);
    add_engine_options(cmd, cfg);
}

int cmd_factorize(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    const Slp slp = load_grammar(cfg, in);
    const auto lf = factorize_slp(slp, {cfg.engine, resolve_seed(cfg)});
    out << (cfg.json ? format_factorization_json(lf, slp.size(), slp.length())
                     : format_factorization_text(lf, slp.size(), slp.length()));
    return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& factorization_path, std::istream& in, std::ostream& out) {
    const Slp slp = load_grammar(cfg, in);
    const std::uint64_t seed = resolve_seed(cfg);
    LyndonFactorization lf;
    if (factorization_path.empty()) {
        lf = factorize_slp(slp, {cfg.engine, seed});
    } else {
        std::ifstream f(factorization_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open '" + factorization_path + "'");
        lf = parse_factorization(read_all(f));
    }

    const LcpEngine engine(slp, cfg.engine, seed);
    const VerifyReport report = verify_factorization(engine, lf);
    bool ok = report.ok();
    for (const auto& c : report.checks) {
        out << c.name << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "duval cross-check: ";
    if (slp.length() > cfg.max_decompress) {
        out << "skipped: N > max_decompress\n";
    } else if (duval(slp.decompress(cfg.max_decompress)) == lf) {
        out << "pass\n";
    } else {
        out << "FAIL\n";
        ok = false;
    }
    return ok ? kOk : kVerifyFailed;
}

unsigned parse_uint(const std::string& s, const char* what) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-' || v > 0xFFFFFFFFul) {
        throw std::invalid_argument(std::string("invalid ") + what + " '" + s + "'");
    }
    return static_cast<unsigned>(v);
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

// Families: "fib K", "power WORD K", "random N SEED".
struct Family {
    std::string label;
    Slp slp;
};

Family make_family(const std::vector<std::string>& words, const RandomSlpOptions& ropts) {
    auto need = [&](std::size_t n) {
        if (words.size() != n) throw std::invalid_argument("expected: fib K | power WORD K | random N SEED");
    };
    if (words.empty()) need(1);
    if (words[0] == "fib") {
        need(2);
        return {"fib:" + words[1], gen_fibonacci(parse_uint(words[1], "Fibonacci index"))};
    }
    if (words[0] == "power") {
        need(3);
        return {"power:" + words[1] + ":" + words[2], gen_power(words[1], parse_uint(words[2], "exponent"))};
    }
    if (words[0] == "random") {
        need(3);
        return {"random:" + words[1] + ":" + words[2],
                gen_random(parse_uint(words[1], "rule count"), parse_u64(words[2], "seed"), ropts)};
    }
    throw std::invalid_argument("unknown family '" + words[0] + "'");
}

int cmd_slice(const CliConfig& cfg, std::uint64_t i, std::uint64_t j, std::istream& in, std::ostream& out) {
    const Slp slp = load_grammar(cfg, in);
    out << serialize_slp(slice_slp(slp, i, j));
    return kOk;
}

int cmd_candidates(const CliConfig& cfg, std::istream& in, std::ostream& out) {
    const Slp slp = load_grammar(cfg, in);
    const LcpEngine engine(slp, cfg.engine, resolve_seed(cfg));
    const CandidateTable table = lfcand_all(engine);
    for (VarId v = 1; v <= table.size(); ++v) {
        out << "X" << v << ":";
        for (auto len : table[v].lengths()) out << " " << len;
        out << "\n";
    }
    return kOk;
}

std::string bench_row(const std::vector<std::string>& words, const CliConfig& cfg, std::uint64_t seed) {
    std::string label;
    for (const auto& part : words) label += (label.empty() ? "" : ":") + part;
    try {
        Family fam = make_family(words, {});
        label = fam.label;
        const auto t0 = std::chrono::steady_clock::now();
        const auto lf = factorize_slp(fam.slp, {cfg.engine, seed});
        const auto t1 = std::chrono::steady_clock::now();
        std::ostringstream row;
        row << label << "," << fam.slp.size() << "," << fam.slp.length() << "," << lf.size() << ","
            << std::chrono::duration<double, std::milli>(t1 - t0).count() << "," << to_string(cfg.engine) << ",ok";
        return row.str();
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        return label + ",,,,," + std::string(to_string(cfg.engine)) + ",error: " + msg;
    }
}

int cmd_bench(const CliConfig& cfg, const std::vector<std::string>& words, unsigned jobs, std::ostream& out) {
    std::vector<std::vector<std::string>> rows;
    if (words.empty()) {
        for (int k = 10; k <= 60; k += 10) rows.push_back({"fib", std::to_string(k)});
        for (int e = 10; e <= 40; e += 10) rows.push_back({"power", "aab", std::to_string(e)});
    } else {
        rows.push_back(words);
    }
    const std::uint64_t seed = resolve_seed(cfg);
    std::vector<std::string> lines(rows.size());
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(rows.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t r = t; r < rows.size(); r += jobs) lines[r] = bench_row(rows[r], cfg, seed);
        });
    }
    for (auto& th : pool) th.join();
    out << "family,n,N,m,wall_ms,engine,status\n";
    for (const auto& l : lines) out << l << "\n";
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lyndon factorization of grammar-compressed strings", "lyndon-slp"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* factorize = app.add_subcommand("factorize", "print the Lyndon factorization as (length, power) pairs");
    add_input_options(*factorize, cfg);
    factorize->add_flag("--json", cfg.json, "JSON output");

    std::string factorization_path;
    auto* verify = app.add_subcommand("verify", "check a factorization (or a fresh one) in compressed space");
    add_input_options(*verify, cfg);
    verify->add_option("--factorization", factorization_path, "factorization file to check");
    verify->add_option("--max-decompress", cfg.max_decompress, "largest N for the Duval cross-check")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> family;
    RandomSlpOptions ropts;
    auto* gen = app.add_subcommand("gen", "emit a grammar: fib K | power WORD K | random N SEED");
    gen->add_option("family", family, "family and parameters")->required();
    gen->add_option("--max-len", ropts.max_length, "random: maximum expansion length");
    gen->add_option("--alphabet", ropts.alphabet, "random: terminal letters");

    std::uint64_t slice_i = 0, slice_j = 0;
    auto* slice = app.add_subcommand("slice", "emit a grammar for val[i..j]");
    slice->add_option("i", slice_i, "first position (1-based)")->required();
    slice->add_option("j", slice_j, "last position (inclusive)")->required();
    slice->add_option("input", cfg.input, "grammar file, or - for standard input");
    add_input_kind_option(*slice, cfg);

    auto* candidates = app.add_subcommand("candidates", "dump per-variable candidate lists");
    add_input_options(*candidates, cfg);

    unsigned jobs = 1;
    std::vector<std::string> bench_family;
    auto* bench = app.add_subcommand("bench", "time factorization over generated families (CSV)");
    bench->add_option("family", bench_family, "fib K | power WORD K | random N SEED (default: standard suite)");
    add_engine_options(*bench, cfg);
    bench->add_option("--jobs", jobs, "parallel rows")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*factorize) return cmd_factorize(cfg, in, out);
        if (*verify) return cmd_verify(cfg, factorization_path, in, out);
        if (*gen) {
            out << serialize_slp(make_family(family, ropts).slp);
            return kOk;
        }
        if (*slice) return cmd_slice(cfg, slice_i, slice_j, in, out);
        if (*candidates) return cmd_candidates(cfg, in, out);
        if (*bench) return cmd_bench(cfg, bench_family, jobs, out);
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const EngineDisagreement& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace lyndon_slp::cli
