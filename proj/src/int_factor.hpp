#pragma once

#include <cstdint>
#include <vector>

namespace lyndon_slp::detail {

bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, ascending. n >= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace lyndon_slp::detail
