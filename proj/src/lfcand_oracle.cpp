#include "lyndon_slp/lyndon.hpp"

#include <algorithm>

namespace lyndon_slp {
namespace {

enum class Standing { wins, loses, open };

// Compares the suffix of u at x against every other suffix of u. `loses` is
// final for every extension of u (the deciding mismatch is already present).
Standing standing(const std::string& u, std::size_t x) {
    const std::size_t n = u.size();
    bool wins = true;
    for (std::size_t q = 0; q < n; ++q) {
        if (q == x) continue;
        std::size_t k = 0;
        while (x + k < n && q + k < n && u[x + k] == u[q + k]) ++k;
        if (x + k < n && q + k < n) {
            if (static_cast<unsigned char>(u[q + k]) < static_cast<unsigned char>(u[x + k])) return Standing::loses;
        } else if (x + k == n) {
            // suffix at x is a prefix of the competitor: smaller for now
        } else {
            wins = false; // competitor is a proper prefix of the suffix at x
        }
    }
    return wins ? Standing::wins : Standing::open;
}

bool has_witness(std::string& u, std::size_t x, std::size_t base, const std::string& alphabet,
                 std::size_t max_witness) {
    for (const char c : alphabet) {
        u.push_back(c);
        const Standing st = standing(u, x);
        const bool found = st == Standing::wins ||
                           (st == Standing::open && u.size() - base < max_witness &&
                            has_witness(u, x, base, alphabet, max_witness));
        u.pop_back();
        if (found) return true;
    }
    return false;
}

} // namespace

std::set<std::uint64_t> lfcand_oracle(std::string_view text, std::size_t max_witness) {
    if (text.empty()) throw std::invalid_argument("oracle needs a non-empty string");
    if (text.size() > 16) throw std::invalid_argument("oracle input longer than 16 characters");
    if (max_witness == 0) max_witness = text.size() + 1;

    std::string alphabet(text);
    alphabet.push_back('\x00');
    alphabet.push_back('\xFF');
    std::sort(alphabet.begin(), alphabet.end(),
              [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::set<std::uint64_t> out;
    std::string u(text);
    for (std::size_t len = 1; len <= text.size(); ++len) {
        if (has_witness(u, text.size() - len, text.size(), alphabet, max_witness)) out.insert(len);
    }
    return out;
}

} // namespace lyndon_slp
