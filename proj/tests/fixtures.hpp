#pragma once

#include "lyndon_slp/slp.hpp"

namespace fixtures {

inline constexpr const char* kExampleText =
    "1 = chr 97\n"
    "2 = chr 98\n"
    "3 = 1 2\n"
    "4 = 1 3\n"
    "5 = 3 4\n"
    "6 = 4 5\n"
    "7 = 6 5\n";

/// val(X7) = "aababaababaab"
inline lyndon_slp::Slp example() { return lyndon_slp::parse_slp(kExampleText); }

inline constexpr std::uint64_t kDecompressLimit = 1'000'000;

} // namespace fixtures
