// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsort/domain.hpp"

namespace dsort {

/// One presence bit per key of a domain. Bit i stands for key
/// domain.key_at(i). Always starts all-zero.
class DecisionString {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    explicit DecisionString(const KeyDomain& domain);

    /// Parses a '0'/'1' string, leftmost character is index 0.
    /// Throws InvalidArgument if the length differs from domain.size().
    static DecisionString from_string(std::string_view bits, const KeyDomain& domain);

    const KeyDomain& domain() const noexcept { return domain_; }
    std::uint64_t size() const noexcept { return domain_.size(); }

    bool test(std::uint64_t index) const noexcept {
        return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
    }
    void set(std::uint64_t index) noexcept {
        words_[index / kWordBits] |= Word{1} << (index % kWordBits);
    }

    std::uint64_t count() const noexcept;
    // popcount over [begin, end)
    std::uint64_t count(std::uint64_t begin, std::uint64_t end) const noexcept;

    /// In-place bitwise OR. Throws DomainMismatch.
    void merge_from(const DecisionString& other);
    /// Lowest index set in both strings, or size() when they are disjoint.
    std::uint64_t first_common(const DecisionString& other) const;

    /// Calls fn(index) for every set bit in [begin, end), ascending.
    template <class Fn>
    void for_each_set(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
        if (begin >= end) return;
        const std::uint64_t last = (end - 1) / kWordBits;
        for (std::uint64_t w = begin / kWordBits; w <= last; ++w) {
            Word bits = masked_word(w, begin, end);
            while (bits != 0) {
                fn(w * kWordBits + static_cast<std::uint64_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::string to_string() const;

    friend bool operator==(const DecisionString&, const DecisionString&) = default;

private:
    // Word w restricted to bit indices in [begin, end).
    Word masked_word(std::uint64_t w, std::uint64_t begin, std::uint64_t end) const noexcept {
        Word bits = words_[w];
        if (w == begin / kWordBits) bits &= ~Word{0} << (begin % kWordBits);
        if (w == (end - 1) / kWordBits && end % kWordBits != 0) {
            bits &= ~Word{0} >> (kWordBits - end % kWordBits);
        }
        return bits;
    }

    KeyDomain domain_;
    std::vector<Word> words_;
};

/// Multiset extension: a multiplicity per key slot instead of a bit.
class CountString {
public:
    explicit CountString(const KeyDomain& domain);

    const KeyDomain& domain() const noexcept { return domain_; }
    std::uint64_t size() const noexcept { return domain_.size(); }
    std::uint64_t total() const noexcept { return total_; }

    std::uint64_t at(std::uint64_t index) const noexcept { return counts_[index]; }
    void increment(std::uint64_t index) noexcept {
        ++counts_[index];
        ++total_;
    }

    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    friend bool operator==(const CountString&, const CountString&) = default;

private:
    KeyDomain domain_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

} // namespace dsort
