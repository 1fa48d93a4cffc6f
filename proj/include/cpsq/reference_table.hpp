#pragma once

#include <array>
#include <cstdint>

namespace cpsq {

/// Every integer <= 5000 that is a sum of squares of consecutive primes, as
/// published with the original bounds. Kept verbatim as the reference for
/// `cpsq table-check`.
inline constexpr std::uint64_t kReferenceTableLimit = 5000;
inline constexpr std::array<std::uint64_t, 91> kReferenceTable = {
    4, 9, 13, 25, 34, 38, 49,
    74, 83, 87, 121, 169, 170, 195,
    204, 208, 289, 290, 339, 361, 364,
    373, 377, 458, 529, 579, 628, 650,
    653, 662, 666, 819, 841, 890, 940,
    961, 989, 1014, 1023, 1027, 1179, 1348,
    1369, 1370, 1469, 1518, 1543, 1552, 1556,
    1681, 1731, 1802, 1849, 2020, 2189, 2209,
    2310, 2330, 2331, 2359, 2384, 2393, 2397,
    2692, 2809, 2981, 3050, 3150, 3171, 3271,
    3320, 3345, 3354, 3358, 3481, 3530, 3700,
    3721, 4011, 4058, 4061, 4350, 4489, 4519,
    4640, 4689, 4714, 4723, 4727, 4852, 4899,
};

}  // namespace cpsq
