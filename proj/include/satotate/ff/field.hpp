#pragma once

#include <cstdint>
#include <stdexcept>

#include "satotate/errors.hpp"
#include "satotate/ff/modular.hpp"
#include "satotate/ff/primes.hpp"

namespace satotate::ff {

/// Element of F_p. Carries its modulus so mixed-field arithmetic is caught.
class Fp {
public:
    Fp(std::int64_t value, Prime p) : residue_(reduce_signed(value, p)), p_(p) {}
    static Fp from_residue(std::uint64_t r, Prime p) { return Fp(r % p.value(), p, Raw{}); }

    [[nodiscard]] std::uint64_t residue() const noexcept { return residue_; }
    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return residue_ == 0; }

    friend Fp operator+(Fp a, Fp b) { return Fp(add_mod(a.residue_, b.residue_, a.check(b)), a.p_, Raw{}); }
    friend Fp operator-(Fp a, Fp b) { return Fp(sub_mod(a.residue_, b.residue_, a.check(b)), a.p_, Raw{}); }
    friend Fp operator*(Fp a, Fp b) { return Fp(mul_mod(a.residue_, b.residue_, a.check(b)), a.p_, Raw{}); }
    Fp operator-() const { return Fp(neg_mod(residue_, p_), p_, Raw{}); }
    friend bool operator==(Fp a, Fp b) { return a.residue_ == b.residue_ && a.p_ == b.p_; }

    [[nodiscard]] Fp pow(std::uint64_t e) const { return Fp(pow_mod(residue_, e, p_), p_, Raw{}); }
    [[nodiscard]] Fp inverse() const {
        if (residue_ == 0) throw std::domain_error("inverse of zero in F_p");
        return Fp(inv_mod_prime(residue_, p_), p_, Raw{});
    }

private:
    struct Raw {};
    Fp(std::uint64_t r, Prime p, Raw) : residue_(r), p_(p) {}
    [[nodiscard]] std::uint64_t check(Fp other) const {
        if (other.p_ != p_) throw std::invalid_argument("F_p operands have different moduli");
        return p_;
    }

    std::uint64_t residue_;
    Prime p_;
};

/// Smallest positive quadratic nonresidue mod an odd prime.
inline std::uint64_t smallest_nonresidue(Prime p) {
    if (p == 2) throw UnsupportedCharacteristic("no quadratic nonresidue mod 2");
    for (std::uint64_t c = 2;; ++c) {
        if (pow_mod(c, (p - 1) / 2, p) == p - 1) return c;
    }
}

/// Element c0 + c1*w of F_{p^2} = F_p[w]/(w^2 - c), c the smallest nonresidue.
class Fp2 {
public:
    Fp2(std::uint64_t c0, std::uint64_t c1, Prime p, std::uint64_t nonresidue)
        : c0_(c0 % p), c1_(c1 % p), nonresidue_(nonresidue), p_(p) {}
    Fp2(std::uint64_t c0, std::uint64_t c1, Prime p) : Fp2(c0, c1, p, smallest_nonresidue(p)) {}

    [[nodiscard]] std::uint64_t c0() const noexcept { return c0_; }
    [[nodiscard]] std::uint64_t c1() const noexcept { return c1_; }
    [[nodiscard]] std::uint64_t nonresidue() const noexcept { return nonresidue_; }
    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return c0_ == 0 && c1_ == 0; }

    friend Fp2 operator+(const Fp2& a, const Fp2& b) {
        a.check(b);
        return {add_mod(a.c0_, b.c0_, a.p_), add_mod(a.c1_, b.c1_, a.p_), a.p_, a.nonresidue_};
    }
    friend Fp2 operator-(const Fp2& a, const Fp2& b) {
        a.check(b);
        return {sub_mod(a.c0_, b.c0_, a.p_), sub_mod(a.c1_, b.c1_, a.p_), a.p_, a.nonresidue_};
    }
    friend Fp2 operator*(const Fp2& a, const Fp2& b) {
        a.check(b);
        const std::uint64_t p = a.p_;
        const std::uint64_t re =
            add_mod(mul_mod(a.c0_, b.c0_, p), mul_mod(a.nonresidue_, mul_mod(a.c1_, b.c1_, p), p), p);
        const std::uint64_t im = add_mod(mul_mod(a.c0_, b.c1_, p), mul_mod(a.c1_, b.c0_, p), p);
        return {re, im, a.p_, a.nonresidue_};
    }
    friend bool operator==(const Fp2& a, const Fp2& b) {
        return a.p_ == b.p_ && a.c0_ == b.c0_ && a.c1_ == b.c1_ && a.nonresidue_ == b.nonresidue_;
    }

    /// N(a) = a * conj(a) = c0^2 - c*c1^2, an element of F_p.
    [[nodiscard]] std::uint64_t norm() const noexcept {
        return sub_mod(mul_mod(c0_, c0_, p_), mul_mod(nonresidue_, mul_mod(c1_, c1_, p_), p_), p_);
    }

    [[nodiscard]] Fp2 pow(std::uint64_t e) const {
        Fp2 r(1, 0, p_, nonresidue_);
        Fp2 b = *this;
        while (e != 0) {
            if (e & 1U) r = r * b;
            b = b * b;
            e >>= 1U;
        }
        return r;
    }

private:
    void check(const Fp2& other) const {
        if (other.p_ != p_ || other.nonresidue_ != nonresidue_) {
            throw std::invalid_argument("F_{p^2} operands live in different fields");
        }
    }

    std::uint64_t c0_, c1_;
    std::uint64_t nonresidue_;
    Prime p_;
};

/// Legendre symbol of a residue modulo an odd prime, by Euler's criterion.
inline int legendre(std::uint64_t a, Prime p) {
    if (p == 2) throw UnsupportedCharacteristic("quadratic character undefined in characteristic 2");
    a %= p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int quadratic_character(Fp a) { return legendre(a.residue(), a.modulus()); }

/// chi_{p^2}(a) = a^{(p^2-1)/2} = (N(a) | p).
inline int quadratic_character(const Fp2& a) { return legendre(a.norm(), a.modulus()); }

}  // namespace satotate::ff
