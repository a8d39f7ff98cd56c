#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "satotate/numeric.hpp"

namespace satotate {

/// Local L-polynomial with constant term 1, coefficients constant term first.
///
/// Weight 0: L(T) = det(1 - rho(Frob) T) for a permutation representation.
/// Weight 1: the numerator of the zeta function of a genus-g curve over F_q, of degree 2g,
/// stored as 1 - t T + q T^2 for elliptic curves (so t = -a_1).
class LPolynomial {
public:
    LPolynomial(std::vector<BigInt> coefficients, unsigned weight, std::uint64_t scale = 1)
        : coeffs_(std::move(coefficients)), weight_(weight), scale_(scale) {
        if (coeffs_.empty() || coeffs_.front() != 1) throw std::invalid_argument("L-polynomial must have constant term 1");
        if (weight_ > 1) throw std::invalid_argument("weight must be 0 or 1");
        if (weight_ == 1) {
            if (degree() % 2 != 0 || degree() == 0) throw std::invalid_argument("weight-1 L-polynomial must have even positive degree");
            if (!satisfies_functional_equation()) {
                throw std::invalid_argument("weight-1 L-polynomial violates a_{2g-i} = q^{g-i} a_i");
            }
        }
    }

    [[nodiscard]] const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    [[nodiscard]] unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    [[nodiscard]] unsigned weight() const noexcept { return weight_; }
    [[nodiscard]] std::uint64_t scale() const noexcept { return scale_; }
    [[nodiscard]] unsigned genus() const noexcept { return weight_ == 1 ? degree() / 2 : 0; }

    /// a_{2g-i} = q^{g-i} a_i for 0 <= i <= g.
    [[nodiscard]] bool satisfies_functional_equation() const {
        const unsigned g = degree() / 2;
        BigInt qpow = 1;
        for (unsigned k = 0; k < g; ++k) qpow *= scale_;  // q^g
        for (unsigned i = 0; i <= g; ++i) {
            if (coeffs_[2 * g - i] != qpow * coeffs_[i]) return false;
            if (i < g) qpow /= scale_;
        }
        return true;
    }

    friend bool operator==(const LPolynomial&, const LPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
    unsigned weight_;
    std::uint64_t scale_;
};

/// Point counts N_1..N_rmax recovered from Z(T) = 1/L(T) = exp(sum N_r T^r / r), using the
/// logarithmic derivative: N_r = -r a_r - sum_{k=1}^{r-1} a_k N_{r-k}.
///
/// In weight 0 these are the counts N_f(p^r) directly. In weight 1 the zeta function is
/// L(T)/((1-T)(1-qT)); the same recurrence then yields the Frobenius power sums
/// s_r = sum alpha^r, and #C(F_{q^r}) = q^r + 1 - s_r.
inline std::vector<BigInt> zeta_expand(const LPolynomial& L, unsigned rmax) {
    const auto& a = L.coefficients();
    auto coef = [&](std::size_t k) -> BigInt { return k < a.size() ? a[k] : BigInt(0); };
    std::vector<BigInt> N(rmax + 1, 0);
    for (unsigned r = 1; r <= rmax; ++r) {
        BigInt v = -BigInt(r) * coef(r);
        for (unsigned k = 1; k < r && k < a.size(); ++k) v -= coef(k) * N[r - k];
        N[r] = v;
    }
    N.erase(N.begin());
    return N;
}

inline std::string to_string(const LPolynomial& L) {
    std::string out;
    for (std::size_t i = 0; i < L.coefficients().size(); ++i) {
        if (i) out += ',';
        out += L[i].str();
    }
    return out;
}

}  // namespace satotate
