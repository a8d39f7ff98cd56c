#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/ff/modular.hpp"

namespace satotate::ff {

/// A rational prime. Construction verifies primality unless it comes from the sieve.
class Prime {
public:
    explicit Prime(std::uint64_t value) : value_(value) {
        if (!is_prime_u64(value)) throw std::invalid_argument(std::to_string(value) + " is not prime");
    }

    static constexpr Prime unchecked(std::uint64_t value) noexcept { return Prime(value, Trusted{}); }

    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }
    constexpr operator std::uint64_t() const noexcept { return value_; }  // NOLINT(google-explicit-constructor)

    friend constexpr auto operator<=>(Prime, Prime) = default;

private:
    struct Trusted {};
    constexpr Prime(std::uint64_t value, Trusted) noexcept : value_(value) {}

    std::uint64_t value_;
};

/// Largest bound accepted by sieve_primes; the prime list itself must fit in memory.
inline constexpr std::uint64_t kMaxSieveBound = std::uint64_t{1} << 32;

/// All primes p <= bound in increasing order (segmented sieve of Eratosthenes).
inline std::vector<Prime> sieve_primes(std::uint64_t bound) {
    if (bound > kMaxSieveBound) {
        throw CapacityError("sieve bound " + std::to_string(bound) + " exceeds " +
                            std::to_string(kMaxSieveBound));
    }
    std::vector<Prime> primes;
    if (bound < 2) return primes;

    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 1;
    std::vector<bool> small_composite(root + 1, false);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (small_composite[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small_composite[j] = true;
    }

    constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;
    std::vector<char> composite(kSegment);
    for (std::uint64_t lo = 2; lo <= bound; lo += kSegment) {
        const std::uint64_t hi = std::min(bound, lo + kSegment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (std::uint64_t q : base) {
            if (q * q > hi) break;
            std::uint64_t start = std::max(q * q, (lo + q - 1) / q * q);
            for (std::uint64_t j = start; j <= hi; j += q) composite[j - lo] = 1;
        }
        for (std::uint64_t n = lo; n <= hi; ++n) {
            if (!composite[n - lo]) primes.push_back(Prime::unchecked(n));
        }
    }
    return primes;
}

}  // namespace satotate::ff
