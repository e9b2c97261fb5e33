// SPDX-License-Identifier: Apache-2.0
#include "dsort/domain.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dsort/error.hpp"

namespace dsort {

KeyDomain domain_from_bounds(Key lower, Key upper, std::uint64_t max_domain_bits) {
    if (upper < lower) {
        throw Error(ErrorKind::InvalidBounds,
                    "upper bound " + std::to_string(upper) + " is below lower bound " +
                        std::to_string(lower));
    }
    const std::uint64_t span = static_cast<std::uint64_t>(upper) - static_cast<std::uint64_t>(lower);
    // span == max means the full 64-bit key range; its size does not fit.
    if (span == std::numeric_limits<std::uint64_t>::max() || span + 1 > max_domain_bits) {
        throw Error(ErrorKind::RangeTooLarge,
                    "domain [" + std::to_string(lower) + ", " + std::to_string(upper) +
                        "] exceeds max_domain_bits " + std::to_string(max_domain_bits));
    }
    return KeyDomain(lower, upper, span + 1);
}

KeyDomain infer_domain(std::span<const Key> keys, std::uint64_t max_domain_bits) {
    if (keys.empty()) {
        throw Error(ErrorKind::EmptyInput, "cannot infer a key domain from an empty input");
    }
    const auto [lo, hi] = std::minmax_element(keys.begin(), keys.end());
    return domain_from_bounds(*lo, *hi, max_domain_bits);
}

} // namespace dsort
