#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "satotate/ff/modular.hpp"
#include "satotate/ff/primes.hpp"

namespace satotate::ff {

/// Integer polynomial, coefficients lowest degree first.
using IntPoly = std::vector<std::int64_t>;

/// Degree of an integer polynomial, -1 for zero.
inline int degree(const IntPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

/// Dense polynomial over F_p, lowest degree first, with no trailing zero coefficients.
class FpPoly {
public:
    explicit FpPoly(Prime p) : p_(p) {}
    FpPoly(std::vector<std::uint64_t> coeffs, Prime p) : coeffs_(std::move(coeffs)), p_(p) {
        for (auto& c : coeffs_) c %= p_;
        trim();
    }

    static FpPoly from_int(const IntPoly& f, Prime p) {
        std::vector<std::uint64_t> c(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) c[i] = reduce_signed(f[i], p);
        return {std::move(c), p};
    }
    static FpPoly x(Prime p) { return {{0, 1}, p}; }
    static FpPoly constant(std::uint64_t c, Prime p) { return {{c}, p}; }

    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    [[nodiscard]] std::uint64_t operator[](std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : 0;
    }

    [[nodiscard]] std::uint64_t eval(std::uint64_t x) const noexcept {
        std::uint64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, x, p_), *it, p_);
        return acc;
    }

    [[nodiscard]] FpPoly monic() const {
        if (is_zero()) return *this;
        const std::uint64_t inv = inv_mod_prime(leading(), p_);
        FpPoly r = *this;
        for (auto& c : r.coeffs_) c = mul_mod(c, inv, p_);
        return r;
    }

    [[nodiscard]] FpPoly derivative() const {
        std::vector<std::uint64_t> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(mul_mod(coeffs_[i], i % p_, p_));
        return {std::move(d), p_};
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        a.check(b);
        std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = add_mod(a[i], b[i], a.p_);
        return {std::move(c), a.p_};
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        a.check(b);
        std::vector<std::uint64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub_mod(a[i], b[i], a.p_);
        return {std::move(c), a.p_};
    }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
        std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] = add_mod(c[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], a.p_), a.p_);
            }
        }
        return {std::move(c), a.p_};
    }
    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder; throws on a zero divisor.
    [[nodiscard]] std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const {
        check(d);
        if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
        if (degree() < d.degree()) return {FpPoly(p_), *this};
        std::vector<std::uint64_t> r = coeffs_;
        std::vector<std::uint64_t> q(coeffs_.size() - d.coeffs_.size() + 1, 0);
        const std::uint64_t inv = inv_mod_prime(d.leading(), p_);
        const std::size_t dd = d.coeffs_.size() - 1;
        for (std::size_t k = r.size(); k-- > dd;) {
            const std::uint64_t coef = mul_mod(r[k], inv, p_);
            q[k - dd] = coef;
            if (coef == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] = sub_mod(r[k - dd + j], mul_mod(coef, d.coeffs_[j], p_), p_);
        }
        r.resize(dd);
        return {FpPoly(std::move(q), p_), FpPoly(std::move(r), p_)};
    }

    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return a.divmod(b).second; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void check(const FpPoly& other) const {
        if (other.p_ != p_) throw std::invalid_argument("polynomials over different fields");
    }

    std::vector<std::uint64_t> coeffs_;
    Prime p_;
};

/// base^exponent mod modulus_poly by binary exponentiation in F_p[x]/(modulus_poly).
inline FpPoly poly_powmod(const FpPoly& base, std::uint64_t exponent, const FpPoly& modulus_poly) {
    if (modulus_poly.is_zero()) throw std::invalid_argument("poly_powmod: zero modulus polynomial");
    const Prime p = modulus_poly.modulus();
    FpPoly result = FpPoly::constant(1, p) % modulus_poly;
    FpPoly b = base % modulus_poly;
    while (exponent != 0) {
        if (exponent & 1U) result = (result * b) % modulus_poly;
        exponent >>= 1U;
        if (exponent != 0) b = (b * b) % modulus_poly;
    }
    return result;
}

/// Monic gcd by the Euclidean algorithm.
inline FpPoly poly_gcd(FpPoly f, FpPoly g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
    while (!g.is_zero()) {
        FpPoly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

}  // namespace satotate::ff
