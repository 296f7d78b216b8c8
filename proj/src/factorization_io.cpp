#include "lyndon_slp/factorization_io.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

namespace lyndon_slp {
namespace {

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw std::invalid_argument("bad number '" + std::string(s) + "' in factorization");
    }
    return v;
}

std::uint64_t json_u64(const nlohmann::json& j) {
    if (j.is_string()) return parse_u64(j.get<std::string>());
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    throw std::invalid_argument("factorization JSON values must be decimal strings");
}

} // namespace

std::string format_factorization_text(const LyndonFactorization& lf, std::size_t rules, std::uint64_t length) {
    std::string out = "n=" + std::to_string(rules) + "\nN=" + std::to_string(length) +
                      "\nm=" + std::to_string(lf.size()) + "\n";
    for (const auto& f : lf.factors) out += std::to_string(f.factor_len) + " " + std::to_string(f.power) + "\n";
    return out;
}

std::string format_factorization_json(const LyndonFactorization& lf, std::size_t rules, std::uint64_t length) {
    nlohmann::ordered_json j;
    j["n"] = std::to_string(rules);
    j["N"] = std::to_string(length);
    j["m"] = std::to_string(lf.size());
    auto& fs = j["factors"] = nlohmann::ordered_json::array();
    for (const auto& f : lf.factors) fs.push_back(nlohmann::ordered_json::array({std::to_string(f.factor_len), std::to_string(f.power)}));
    return j.dump() + "\n";
}

LyndonFactorization parse_factorization(std::string_view text) {
    LyndonFactorization lf;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        const auto j = nlohmann::json::parse(text);
        for (const auto& f : j.at("factors")) {
            if (f.size() != 2) throw std::invalid_argument("factor entries must be [len, power] pairs");
            lf.factors.push_back({json_u64(f[0]), json_u64(f[1])});
        }
        return lf;
    }
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#' ||
            line.find('=') != std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw std::invalid_argument("expected '<factor_len> <power>', got '" + line + "'");
        }
        lf.factors.push_back({parse_u64(a), parse_u64(b)});
    }
    return lf;
}

} // namespace lyndon_slp
