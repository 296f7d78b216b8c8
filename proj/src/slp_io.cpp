#include "lyndon_slp/slp.hpp"

#include <charconv>

namespace lyndon_slp {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t to_u64(std::string_view tok, std::size_t line, const char* what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
    }
    return v;
}

VarId to_var(std::string_view tok, std::size_t line) {
    const auto v = to_u64(tok, line, "variable index");
    if (v == 0 || v > 0xFFFFFFFFu) throw ParseError(line, "variable index out of range: " + std::string(tok));
    return static_cast<VarId>(v);
}

} // namespace

Slp parse_slp(std::string_view text) {
    std::vector<Rule> rules;
    std::optional<VarId> root;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto tok = split_ws(line);
        if (tok.empty() || tok[0].front() == '#') continue;
        if (root) throw ParseError(line_no, "content after root directive");
        if (tok.size() < 3 || tok[1] != "=") throw ParseError(line_no, "expected '<i> = ...'");

        if (tok[0] == "root") {
            if (tok.size() != 3) throw ParseError(line_no, "expected 'root = <i>'");
            root = to_var(tok[2], line_no);
            if (*root > rules.size()) throw ParseError(line_no, "root refers to undefined variable");
            continue;
        }
        const VarId self = to_var(tok[0], line_no);
        if (self != rules.size() + 1) {
            throw ParseError(line_no, "expected rule " + std::to_string(rules.size() + 1) + ", got " +
                                          std::string(tok[0]));
        }
        if (tok.size() != 4) throw ParseError(line_no, "expected '<i> = chr <d>' or '<i> = <j> <k>'");
        if (tok[2] == "chr") {
            const auto b = to_u64(tok[3], line_no, "byte value");
            if (b > 255) throw ParseError(line_no, "byte value out of range: " + std::string(tok[3]));
            rules.push_back(Rule::terminal(static_cast<std::uint8_t>(b)));
        } else {
            const VarId l = to_var(tok[2], line_no);
            const VarId r = to_var(tok[3], line_no);
            if (l >= self || r >= self) {
                throw ParseError(line_no, "rule " + std::to_string(self) + " must reference earlier variables");
            }
            rules.push_back(Rule::concat(l, r));
        }
    }
    if (rules.empty()) throw ParseError(0, "empty program");
    return Slp::from_rules(std::move(rules), root);
}

std::string serialize_slp(const Slp& slp) {
    std::string out = "# slp n=" + std::to_string(slp.size()) + " N=" + std::to_string(slp.length()) + "\n";
    VarId i = 0;
    for (const Rule& r : slp.rules()) {
        out += std::to_string(++i);
        if (r.is_terminal()) {
            out += " = chr " + std::to_string(r.byte) + "\n";
        } else {
            out += " = " + std::to_string(r.left) + " " + std::to_string(r.right) + "\n";
        }
    }
    if (slp.root() != slp.size()) out += "root = " + std::to_string(slp.root()) + "\n";
    return out;
}

} // namespace lyndon_slp
