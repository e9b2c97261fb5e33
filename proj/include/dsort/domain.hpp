// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

namespace dsort {

using Key = std::int64_t;

/// Upper bound on the number of slots a decision string may allocate.
/// 2^31 bits is 256 MiB of bit string.
inline constexpr std::uint64_t kDefaultMaxDomainBits = std::uint64_t{1} << 31;

/// Closed key interval [lower, upper] with size = upper - lower + 1.
/// Only obtainable through domain_from_bounds() / infer_domain(), so every
/// instance satisfies its invariants.
class KeyDomain {
public:
    Key lower() const noexcept { return lower_; }
    Key upper() const noexcept { return upper_; }
    std::uint64_t size() const noexcept { return size_; }

    bool contains(Key key) const noexcept { return key >= lower_ && key <= upper_; }

    // Slot of a key inside the decision string. Caller guarantees contains(key).
    std::uint64_t index_of(Key key) const noexcept {
        return static_cast<std::uint64_t>(key) - static_cast<std::uint64_t>(lower_);
    }
    Key key_at(std::uint64_t index) const noexcept {
        return static_cast<Key>(static_cast<std::uint64_t>(lower_) + index);
    }

    friend bool operator==(const KeyDomain&, const KeyDomain&) = default;

private:
    friend KeyDomain domain_from_bounds(Key, Key, std::uint64_t);
    KeyDomain(Key lower, Key upper, std::uint64_t size) noexcept
        : lower_(lower), upper_(upper), size_(size) {}

    Key lower_;
    Key upper_;
    std::uint64_t size_;
};

/// Throws InvalidBounds when upper < lower, RangeTooLarge when the domain
/// would need more than max_domain_bits slots.
KeyDomain domain_from_bounds(Key lower, Key upper,
                             std::uint64_t max_domain_bits = kDefaultMaxDomainBits);

/// Tightest domain covering keys. Throws EmptyInput on an empty sequence.
KeyDomain infer_domain(std::span<const Key> keys,
                       std::uint64_t max_domain_bits = kDefaultMaxDomainBits);

} // namespace dsort
