#include "lyndon_slp/lyndon.hpp"

namespace lyndon_slp {

bool VerifyReport::ok() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

VerifyReport verify_factorization(const LcpEngine& engine, const LyndonFactorization& lf,
                                  std::uint64_t lyndon_bound) {
    const Slp& slp = engine.slp();
    const VarId root = slp.root();
    VerifyReport report;

    VerifyCheck total{"total length", true, {}};
    for (std::size_t i = 0; i < lf.size() && total.passed; ++i) {
        if (lf.factors[i].factor_len == 0 || lf.factors[i].power == 0) {
            total = {"total length", false, "factor " + std::to_string(i + 1) + " has zero length or power"};
        }
    }
    if (total.passed) {
        try {
            const std::uint64_t sum = lf.total_length();
            if (lf.factors.empty() || sum != slp.length()) {
                total.passed = false;
                total.detail = "factors cover " + std::to_string(sum) + " of " + std::to_string(slp.length());
            }
        } catch (const std::overflow_error& e) {
            total.passed = false;
            total.detail = e.what();
        }
    }
    report.checks.push_back(total);
    if (!total.passed) return report;

    std::vector<std::uint64_t> starts;
    std::uint64_t pos = 1;
    for (const auto& f : lf.factors) {
        starts.push_back(pos);
        pos += f.factor_len * f.power;
    }

    VerifyCheck period{"block periods", true, {}};
    for (std::size_t i = 0; i < lf.size() && period.passed; ++i) {
        const auto [len, power] = lf.factors[i];
        const std::uint64_t rest = len * (power - 1);
        if (power > 1 && !engine.equal({root, starts[i], rest}, {root, starts[i] + len, rest})) {
            period = {"block periods", false,
                      "factor " + std::to_string(i + 1) + ": block does not have period " + std::to_string(len)};
        }
    }
    report.checks.push_back(period);

    VerifyCheck order{"strictly descending factors", true, {}};
    for (std::size_t i = 0; i + 1 < lf.size() && order.passed; ++i) {
        const Span cur{root, starts[i], lf.factors[i].factor_len};
        const Span next{root, starts[i + 1], lf.factors[i + 1].factor_len};
        if (engine.compare(cur, next) != std::strong_ordering::greater) {
            order = {"strictly descending factors", false,
                     "factor " + std::to_string(i + 1) + " is not greater than factor " + std::to_string(i + 2)};
        }
    }
    report.checks.push_back(order);

    VerifyCheck lyndon{"Lyndon factors", true, {}};
    for (std::size_t i = 0; i < lf.size(); ++i) {
        const std::uint64_t len = lf.factors[i].factor_len;
        if (len > lyndon_bound) {
            ++report.lyndon_assumed;
            continue;
        }
        if (lyndon.passed && !is_lyndon(slp.expand({root, starts[i], len}, lyndon_bound))) {
            lyndon = {"Lyndon factors", false, "factor " + std::to_string(i + 1) + " is not a Lyndon word"};
        }
    }
    if (lyndon.passed && report.lyndon_assumed > 0) {
        lyndon.detail = std::to_string(report.lyndon_assumed) +
                        " factor(s) above the size bound: period+order checked, Lyndon-ness assumed";
    }
    report.checks.push_back(lyndon);
    return report;
}

} // namespace lyndon_slp
