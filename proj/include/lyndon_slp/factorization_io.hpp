#pragma once

#include <string>
#include <string_view>

#include "lyndon_slp/lyndon.hpp"

namespace lyndon_slp {

/// `n=`, `N=`, `m=` header lines followed by one `<factor_len> <power>` line per factor.
std::string format_factorization_text(const LyndonFactorization& lf, std::size_t rules, std::uint64_t length);

/// {"n":"..","N":"..","m":"..","factors":[["len","pow"],...]}; every number is a decimal string.
std::string format_factorization_json(const LyndonFactorization& lf, std::size_t rules, std::uint64_t length);

/// Reads either format. In text, `key=value` and `#` lines are ignored.
LyndonFactorization parse_factorization(std::string_view text);

} // namespace lyndon_slp
