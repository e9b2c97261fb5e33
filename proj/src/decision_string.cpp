// SPDX-License-Identifier: Apache-2.0
#include "dsort/decision_string.hpp"

#include "dsort/error.hpp"

namespace dsort {

DecisionString::DecisionString(const KeyDomain& domain)
    : domain_(domain), words_((domain.size() + kWordBits - 1) / kWordBits, Word{0}) {}

DecisionString DecisionString::from_string(std::string_view bits, const KeyDomain& domain) {
    if (bits.size() != domain.size()) {
        throw Error(ErrorKind::InvalidArgument,
                    "bit string length " + std::to_string(bits.size()) +
                        " does not match domain size " + std::to_string(domain.size()));
    }
    DecisionString ds(domain);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            ds.set(i);
        } else if (bits[i] != '0') {
            throw Error(ErrorKind::InvalidArgument, "bit string may only contain '0' and '1'");
        }
    }
    return ds;
}

std::uint64_t DecisionString::count() const noexcept {
    std::uint64_t total = 0;
    for (Word w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t DecisionString::count(std::uint64_t begin, std::uint64_t end) const noexcept {
    if (begin >= end) return 0;
    std::uint64_t total = 0;
    const std::uint64_t last = (end - 1) / kWordBits;
    for (std::uint64_t w = begin / kWordBits; w <= last; ++w) {
        total += static_cast<std::uint64_t>(std::popcount(masked_word(w, begin, end)));
    }
    return total;
}

void DecisionString::merge_from(const DecisionString& other) {
    if (!(domain_ == other.domain_)) {
        throw Error(ErrorKind::DomainMismatch, "cannot combine decision strings over different domains");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::uint64_t DecisionString::first_common(const DecisionString& other) const {
    if (!(domain_ == other.domain_)) {
        throw Error(ErrorKind::DomainMismatch, "cannot intersect decision strings over different domains");
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word both = words_[i] & other.words_[i];
        if (both != 0) return i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(both));
    }
    return size();
}

std::string DecisionString::to_string() const {
    std::string out(size(), '0');
    for_each_set(0, size(), [&](std::uint64_t i) { out[i] = '1'; });
    return out;
}

CountString::CountString(const KeyDomain& domain) : domain_(domain), counts_(domain.size(), 0) {}

} // namespace dsort
