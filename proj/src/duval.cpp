#include "lyndon_slp/lyndon.hpp"

#include <limits>

namespace lyndon_slp {

std::uint64_t LyndonFactorization::total_length() const {
    std::uint64_t total = 0;
    for (const auto& f : factors) {
        if (f.power != 0 && f.factor_len > std::numeric_limits<std::uint64_t>::max() / f.power) {
            throw std::overflow_error("factor length overflows 64 bits");
        }
        const std::uint64_t block = f.factor_len * f.power;
        if (total > std::numeric_limits<std::uint64_t>::max() - block) {
            throw std::overflow_error("factorization length overflows 64 bits");
        }
        total += block;
    }
    return total;
}

LyndonFactorization duval(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("cannot factorize the empty string");
    const auto at = [&](std::size_t p) { return static_cast<unsigned char>(text[p]); };
    const std::size_t n = text.size();
    LyndonFactorization lf;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && at(k) <= at(j)) {
            k = at(k) < at(j) ? i : k + 1;
            ++j;
        }
        const std::size_t period = j - k;
        std::uint64_t count = 0;
        while (i <= k) {
            i += period;
            ++count;
        }
        lf.factors.push_back({period, count});
    }
    return lf;
}

bool is_lyndon(std::string_view text) {
    if (text.empty()) return false;
    const auto lf = duval(text);
    return lf.size() == 1 && lf.factors[0].power == 1;
}

} // namespace lyndon_slp
