#pragma once

#include <cstdint>

namespace satotate::ff {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// All helpers assume operands already reduced to [0, m).

constexpr u64 add_mod(u64 a, u64 b, u64 m) noexcept {
    const u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) noexcept { return a >= b ? a - b : a + (m - b); }

constexpr u64 neg_mod(u64 a, u64 m) noexcept { return a == 0 ? 0 : m - a; }

constexpr u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

constexpr u64 pow_mod(u64 base, u64 e, u64 m) noexcept {
    u64 r = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1U) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1U;
    }
    return r;
}

/// Reduce a signed integer into [0, m).
constexpr u64 reduce_signed(std::int64_t a, u64 m) noexcept {
    if (a >= 0) return static_cast<u64>(a) % m;
    // -(a+1) avoids overflow at INT64_MIN
    const u64 r = (static_cast<u64>(-(a + 1)) % m + 1) % m;
    return r == 0 ? 0 : m - r;
}

/// Inverse of a nonzero residue modulo a prime, by Fermat.
constexpr u64 inv_mod_prime(u64 a, u64 p) noexcept { return pow_mod(a, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit inputs.
constexpr bool is_prime_u64(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace satotate::ff
