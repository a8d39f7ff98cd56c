#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/ff/poly.hpp"

namespace satotate::ff {

/// Factorization pattern of a degree-d polynomial mod p: counts[i-1] = number of
/// irreducible factors of degree i. Equivalently the cycle type of Frobenius on the roots.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<unsigned> counts) : counts_(std::move(counts)) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i) d += (i + 1) * counts_[i];
        if (d != counts_.size()) throw std::invalid_argument("cycle type counts must partition their length");
    }

    [[nodiscard]] unsigned degree() const noexcept { return static_cast<unsigned>(counts_.size()); }
    /// n_i for 1 <= i <= d.
    [[nodiscard]] unsigned count(unsigned i) const { return counts_.at(i - 1); }
    [[nodiscard]] const std::vector<unsigned>& counts() const noexcept { return counts_; }

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    std::vector<unsigned> counts_;
};

/// Every cycle type of the given degree (i.e. every partition of d).
inline std::vector<CycleType> all_cycle_types(unsigned d) {
    std::vector<CycleType> out;
    std::vector<unsigned> counts(d, 0);
    // recurse on the largest part allowed
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(counts);
            return;
        }
        for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
            ++counts[part - 1];
            self(self, remaining - part, part);
            --counts[part - 1];
        }
    };
    if (d > 0) rec(rec, d, d);
    return out;
}

/// Reduce f mod p, insisting that the degree is preserved.
inline FpPoly reduce_preserving_degree(const IntPoly& f, Prime p) {
    const int d = degree(f);
    if (d < 1) throw std::invalid_argument("polynomial must have degree >= 1");
    FpPoly fp = FpPoly::from_int(f, p);
    if (fp.degree() != d) throw BadReduction("leading coefficient vanishes mod " + std::to_string(p.value()), p);
    return fp;
}

/// Factorization pattern of a squarefree polynomial over F_p via distinct-degree splitting:
/// h_i = gcd(g_i, x^{p^i} - x) collects the degree-i factors of what remains.
inline CycleType factorization_pattern(const FpPoly& f) {
    const Prime p = f.modulus();
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("factorization_pattern: degree must be >= 1");
    if (poly_gcd(f, f.derivative()).degree() > 0) throw NotSquarefree(p);

    std::vector<unsigned> n(static_cast<std::size_t>(d), 0);
    FpPoly g = f.monic();
    FpPoly r = FpPoly::x(p);
    const FpPoly x = FpPoly::x(p);
    for (int i = 1; i <= d; ++i) {
        if (2 * i > g.degree()) {
            // what is left is irreducible (or trivial)
            if (g.degree() >= i) n[static_cast<std::size_t>(g.degree() - 1)] = 1;
            break;
        }
        r = poly_powmod(r, p, g);
        const FpPoly h = poly_gcd(g, r - x);
        n[static_cast<std::size_t>(i - 1)] = static_cast<unsigned>(h.degree() / i);
        g = g.divmod(h).first;
        if (g.degree() == 0) break;
        r = r % g;
    }
    return CycleType(std::move(n));
}

/// Factorization pattern of an integer polynomial reduced mod p.
/// Throws BadReduction if the degree drops and NotSquarefree if f mod p has a repeated factor.
inline CycleType factorization_pattern(const IntPoly& f, Prime p) {
    return factorization_pattern(reduce_preserving_degree(f, p));
}

/// Number of distinct roots of f in F_p, computed as deg gcd(x^p - x mod f, f).
inline unsigned distinct_root_count(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("distinct_root_count: zero polynomial");
    if (f.degree() == 0) return 0;
    const Prime p = f.modulus();
    const FpPoly x = FpPoly::x(p);
    const FpPoly xp = poly_powmod(x, p, f);
    return static_cast<unsigned>(poly_gcd(f, xp - x).degree());
}

}  // namespace satotate::ff
