#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/ff/field.hpp"
#include "satotate/ff/poly.hpp"
#include "satotate/ff/primes.hpp"
#include "satotate/lpoly.hpp"
#include "satotate/numeric.hpp"
#include "satotate/stats/accumulator.hpp"
#include "satotate/survey.hpp"

namespace satotate::curves {

using ff::IntPoly;
using ff::Prime;

// ---------------------------------------------------------------------------
// Point-counting kernels

/// chi(a) for every residue a mod p, or empty when p exceeds the table limit.
class CharacterTable {
public:
    static constexpr std::uint64_t kMaxTablePrime = std::uint64_t{1} << 20;

    explicit CharacterTable(Prime p) : p_(p) {
        if (p == 2) throw UnsupportedCharacteristic("quadratic character undefined in characteristic 2");
        if (p > kMaxTablePrime) return;
        chi_.assign(p, -1);
        chi_[0] = 0;
        // (x+1)^2 = x^2 + 2x + 1, kept reduced without division
        std::uint64_t sq = 0;
        std::uint64_t odd = 1;  // 2x + 1 mod p
        for (std::uint64_t x = 0; x < (p - 1) / 2; ++x) {
            sq += odd;
            if (sq >= p) sq -= p;
            chi_[sq] = 1;
            odd += 2;
            if (odd >= p) odd -= p;
        }
    }

    [[nodiscard]] bool tabulated() const noexcept { return !chi_.empty(); }
    [[nodiscard]] const std::int8_t* data() const noexcept { return chi_.data(); }

    [[nodiscard]] int operator()(std::uint64_t a) const {
        return chi_.empty() ? ff::legendre(a, p_) : chi_[a];
    }

private:
    Prime p_;
    std::vector<std::int8_t> chi_;
};

namespace detail {

template <int D, class Chi>
std::int64_t difference_walk(std::uint64_t* diff, std::uint64_t p, Chi chi) {
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        sum += chi(diff[0]);
        for (int i = 0; i < D; ++i) {
            const std::uint64_t v = diff[i] + diff[i + 1];
            diff[i] = v >= p ? v - p : v;
        }
    }
    return sum;
}

template <class Chi>
std::int64_t difference_walk(int d, std::uint64_t* diff, std::uint64_t p, Chi chi) {
    switch (d) {
        case 0: return difference_walk<0>(diff, p, chi);
        case 1: return difference_walk<1>(diff, p, chi);
        case 2: return difference_walk<2>(diff, p, chi);
        case 3: return difference_walk<3>(diff, p, chi);
        case 4: return difference_walk<4>(diff, p, chi);
        case 5: return difference_walk<5>(diff, p, chi);
        case 6: return difference_walk<6>(diff, p, chi);
        default: throw std::invalid_argument("character_sum: degree above 6 is not supported");
    }
}

}  // namespace detail

/// sum_{x in F_p} chi(f(x)), stepping f through a forward-difference table so each x
/// costs deg(f) modular additions. Degrees up to 6.
inline std::int64_t character_sum(const ff::FpPoly& f, const CharacterTable& chi) {
    const std::uint64_t p = f.modulus();
    const int d = std::max(0, f.degree());
    if (d > 6) throw std::invalid_argument("character_sum: degree above 6 is not supported");
    std::uint64_t diff[7] = {};
    for (int i = 0; i <= d; ++i) diff[i] = f.eval(static_cast<std::uint64_t>(i) % p);
    for (int k = 1; k <= d; ++k) {
        for (int i = d; i >= k; --i) diff[i] = ff::sub_mod(diff[i], diff[i - 1], p);
    }
    if (chi.tabulated()) {
        const std::int8_t* table = chi.data();
        return detail::difference_walk(d, diff, p, [table](std::uint64_t a) { return table[a]; });
    }
    return detail::difference_walk(d, diff, p, [&chi](std::uint64_t a) { return chi(a); });
}

/// sum_{x in F_{p^2}} chi(f(x)), with F_{p^2} = F_p[w]/(w^2 - c) and the norm-based
/// character chi(a) = (N(a) | p). For each imaginary part b, g(a) = f(a + b w) is walked
/// over a in F_p by forward differences in F_{p^2}; norms come from square tables.
inline std::int64_t character_sum_fp2(const ff::FpPoly& f, const CharacterTable& chi) {
    const Prime prime = f.modulus();
    const std::uint64_t p = prime;
    const int d = std::max(0, f.degree());
    if (d > 6) throw std::invalid_argument("character_sum_fp2: degree above 6 is not supported");
    const std::uint64_t c = ff::smallest_nonresidue(prime);

    std::vector<std::uint64_t> sq;
    std::vector<std::uint64_t> csq;
    if (chi.tabulated()) {
        sq.resize(p);
        csq.resize(p);
        for (std::uint64_t x = 0; x < p; ++x) {
            sq[x] = ff::mul_mod(x, x, p);
            csq[x] = ff::mul_mod(c, sq[x], p);
        }
    }
    auto norm = [&](std::uint64_t re, std::uint64_t im) {
        if (!sq.empty()) return ff::sub_mod(sq[re], csq[im], p);
        return ff::sub_mod(ff::mul_mod(re, re, p), ff::mul_mod(c, ff::mul_mod(im, im, p), p), p);
    };

    std::int64_t sum = 0;
    std::uint64_t re[7] = {};
    std::uint64_t im[7] = {};
    for (std::uint64_t b = 0; b < p; ++b) {
        for (int i = 0; i <= d; ++i) {
            const ff::Fp2 x(static_cast<std::uint64_t>(i), b, prime, c);
            ff::Fp2 v(0, 0, prime, c);
            for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) v = v * x + ff::Fp2(*it, 0, prime, c);
            re[i] = v.c0();
            im[i] = v.c1();
        }
        for (int k = 1; k <= d; ++k) {
            for (int i = d; i >= k; --i) {
                re[i] = ff::sub_mod(re[i], re[i - 1], p);
                im[i] = ff::sub_mod(im[i], im[i - 1], p);
            }
        }
        for (std::uint64_t a = 0; a < p; ++a) {
            sum += chi(norm(re[0], im[0]));
            for (int i = 0; i < d; ++i) {
                const std::uint64_t r = re[i] + re[i + 1];
                const std::uint64_t m = im[i] + im[i + 1];
                re[i] = r >= p ? r - p : r;
                im[i] = m >= p ? m - p : m;
            }
        }
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Elliptic curves

/// y^2 = x^3 + A x + B over Q.
class EllipticCurve {
public:
    EllipticCurve(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
        if (discriminant() == 0) throw std::invalid_argument("singular curve: discriminant is zero");
    }

    [[nodiscard]] std::int64_t a() const noexcept { return a_; }
    [[nodiscard]] std::int64_t b() const noexcept { return b_; }
    /// -16(4A^3 + 27B^2)
    [[nodiscard]] BigInt discriminant() const {
        const BigInt A = a_;
        const BigInt B = b_;
        return -16 * (4 * A * A * A + 27 * B * B);
    }
    [[nodiscard]] bool has_good_reduction(Prime p) const {
        return p > 3 && discriminant() % BigInt(p.value()) != 0;
    }
    [[nodiscard]] ff::FpPoly rhs(Prime p) const { return ff::FpPoly::from_int({b_, a_, 0, 1}, p); }

private:
    std::int64_t a_, b_;
};

/// t_p = p + 1 - #E(F_p) = -sum_x chi(x^3 + A x + B).
inline std::int64_t ec_trace(const EllipticCurve& E, Prime p) {
    if (!E.has_good_reduction(p)) throw BadReduction(p);
    return -character_sum(E.rhs(p), CharacterTable(p));
}

/// a_r = alpha^r + conj(alpha)^r and its normalization x_r = a_r / q^{r/2}.
struct PowerTrace {
    BigInt a;
    double x;
};

inline void check_hasse(std::int64_t t, std::uint64_t q) {
    const auto t2 = static_cast<unsigned __int128>(static_cast<__int128>(t) * t);
    if (t2 > static_cast<unsigned __int128>(4) * q) {
        throw std::invalid_argument("trace " + std::to_string(t) + " exceeds 2*sqrt(" + std::to_string(q) + ")");
    }
}

/// x_0..x_rmax from x_{r+1} = x_1 x_r - x_{r-1}, the recurrence below divided by q^{(r+1)/2}.
inline std::vector<double> normalized_power_traces(std::int64_t t, std::uint64_t q, std::size_t rmax) {
    check_hasse(t, q);
    std::vector<double> x(rmax + 1);
    x[0] = 2.0;
    if (rmax == 0) return x;
    x[1] = static_cast<double>(t) / std::sqrt(static_cast<double>(q));
    for (std::size_t r = 1; r < rmax; ++r) x[r + 1] = x[1] * x[r] - x[r - 1];
    return x;
}

/// True iff a_r = 0 exactly. With x_1 = 2cos(theta) and x_1^2 = t^2/q rational, theta/pi is
/// rational only when t^2/q is an algebraic integer, i.e. t^2 = kq with 0 <= k <= 4; then
/// theta is pi/2, pi/3, pi/4, pi/6 or 0 (up to theta -> pi - theta) and the zeros of
/// cos(r theta) are explicit. Otherwise a_r never vanishes.
inline bool power_trace_is_zero(std::int64_t t, std::uint64_t q, std::size_t r) {
    check_hasse(t, q);
    const auto t2 = static_cast<unsigned __int128>(static_cast<__int128>(t) * t);
    if (t2 % q != 0) return false;
    switch (static_cast<unsigned>(t2 / q)) {
        case 0: return r % 2 == 1;  // pi/2
        case 2: return r % 4 == 2;  // pi/4
        case 3: return r % 6 == 3;  // pi/6
        default: return false;      // pi/3 or 0
    }
}

/// Exact traces of Frobenius powers: a_0 = 2, a_1 = t, a_{r+1} = t a_r - q a_{r-1}.
inline std::vector<PowerTrace> frobenius_power_traces(std::int64_t t, std::uint64_t q, std::size_t rmax) {
    static constexpr std::size_t kMaxExact = 10'000;
    if (rmax > kMaxExact) throw CapacityError("exact power traces are limited to r <= 10^4; use normalized_power_traces");
    const std::vector<double> x = normalized_power_traces(t, q, rmax);
    std::vector<PowerTrace> out;
    out.reserve(rmax + 1);
    BigInt prev = 2;
    BigInt cur = t;
    out.push_back({prev, x[0]});
    if (rmax >= 1) out.push_back({cur, x[1]});
    for (std::size_t r = 1; r < rmax; ++r) {
        BigInt next = BigInt(t) * cur - BigInt(q) * prev;
        prev = std::move(cur);
        cur = std::move(next);
        out.push_back({cur, x[r + 1]});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Genus-2 curves

namespace detail {

using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline RatPoly rat_mod(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational coef = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
        trim(a);
    }
    return a;
}

}  // namespace detail

/// True if f has no repeated factor over Q, i.e. gcd(f, f') is constant.
inline bool is_squarefree_over_q(const IntPoly& f) {
    detail::RatPoly a(f.begin(), f.end());
    detail::trim(a);
    if (a.size() <= 1) return !a.empty();
    detail::RatPoly b;
    for (std::size_t i = 1; i < a.size(); ++i) b.push_back(a[i] * static_cast<long long>(i));
    detail::trim(b);
    while (!b.empty()) {
        detail::RatPoly r = detail::rat_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

/// y^2 = f(x) with deg f in {5, 6} and f squarefree over Q.
class HyperellipticCurve {
public:
    explicit HyperellipticCurve(IntPoly f) : f_(std::move(f)) {
        const int d = ff::degree(f_);
        if (d != 5 && d != 6) throw std::invalid_argument("genus-2 model needs deg f = 5 or 6");
        f_.resize(static_cast<std::size_t>(d) + 1);
        if (!is_squarefree_over_q(f_)) throw std::invalid_argument("f must be squarefree over Q");
    }

    [[nodiscard]] const IntPoly& f() const noexcept { return f_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(f_.size()) - 1; }
    [[nodiscard]] static constexpr unsigned genus() noexcept { return 2; }

    [[nodiscard]] bool has_good_reduction(Prime p) const {
        if (p == 2) return false;
        const ff::FpPoly fp = ff::FpPoly::from_int(f_, p);
        if (fp.degree() != degree()) return false;
        return ff::poly_gcd(fp, fp.derivative()).degree() == 0;
    }

private:
    IntPoly f_;
};

/// #C(F_q) for q = p (extension_degree 1) or q = p^2 (extension_degree 2), counting the
/// points at infinity of the smooth model: one for deg f = 5, 1 + chi(lc) for deg f = 6.
inline std::uint64_t hyperelliptic_count(const HyperellipticCurve& C, Prime p, unsigned extension_degree) {
    if (extension_degree != 1 && extension_degree != 2) throw std::invalid_argument("only F_p and F_{p^2} are supported");
    if (!C.has_good_reduction(p)) throw BadReduction(p);
    const ff::FpPoly fp = ff::FpPoly::from_int(C.f(), p);
    const CharacterTable chi(p);
    std::int64_t affine = 0;
    std::int64_t infinity = 1;
    if (extension_degree == 1) {
        affine = static_cast<std::int64_t>(p.value()) + character_sum(fp, chi);
        if (C.degree() == 6) infinity = 1 + chi(fp.leading());
    } else {
        affine = static_cast<std::int64_t>(p.value() * p.value()) + character_sum_fp2(fp, chi);
        // every element of F_p is a square in F_{p^2}
        if (C.degree() == 6) infinity = 2;
    }
    return static_cast<std::uint64_t>(affine + infinity);
}

/// L_p(T) = 1 - e1 T + e2 T^2 - p e1 T^3 + p^2 T^4 from the counts over F_p and F_{p^2}.
inline LPolynomial hyperelliptic_lpoly(const HyperellipticCurve& C, Prime p) {
    const BigInt q = p.value();
    const BigInt s1 = q + 1 - BigInt(hyperelliptic_count(C, p, 1));
    const BigInt s2 = q * q + 1 - BigInt(hyperelliptic_count(C, p, 2));
    const BigInt twice_e2 = s1 * s1 - s2;
    if (twice_e2 % 2 != 0) throw ConsistencyError("s1^2 - s2 is odd at p = " + std::to_string(p.value()));
    const BigInt e1 = s1;
    const BigInt e2 = twice_e2 / 2;
    if (e1 * e1 > 16 * q || abs(e2) > 6 * q) {
        throw ConsistencyError("Weil bound violated at p = " + std::to_string(p.value()));
    }
    return LPolynomial({1, -e1, e2, -q * e1, q * q}, 1, p.value());
}

/// p + 1 - #C(F_p), the first power sum of Frobenius.
inline std::int64_t hyperelliptic_trace(const HyperellipticCurve& C, Prime p) {
    return static_cast<std::int64_t>(p.value()) + 1 - static_cast<std::int64_t>(hyperelliptic_count(C, p, 1));
}

// ---------------------------------------------------------------------------
// Normalization

/// L(T / sqrt(q)): coefficient i scaled by q^{-i/2}; roots move to the unit circle.
struct NormalizedLPoly {
    std::vector<double> coefficients;  // abar_0 .. abar_{2g}
    LPolynomial raw;
    std::uint64_t q;

    /// Normalized trace -abar_1 (t/sqrt(q) for elliptic curves).
    [[nodiscard]] double trace() const { return -coefficients.at(1); }
};

inline NormalizedLPoly normalize_lpoly(const LPolynomial& L, std::uint64_t q) {
    if (L.weight() != 1 || L.scale() != q) throw std::invalid_argument("normalize_lpoly needs a weight-1 L-polynomial at scale q");
    std::vector<double> c(L.coefficients().size());
    const double sq = std::sqrt(static_cast<double>(q));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(L[i]) / std::pow(sq, static_cast<double>(i));
    return {std::move(c), L, q};
}

inline LPolynomial elliptic_lpoly(const EllipticCurve& E, Prime p) {
    const std::int64_t t = ec_trace(E, p);
    return LPolynomial({1, -t, BigInt(p.value())}, 1, p.value());
}

// ---------------------------------------------------------------------------
// Surveys

/// Imaginary quadratic field Q(sqrt(D)) given by its fundamental discriminant D < 0.
class QuadraticField {
public:
    explicit QuadraticField(std::int64_t discriminant) : d_(discriminant) {
        if (!is_fundamental_negative(d_)) {
            throw std::invalid_argument(std::to_string(d_) + " is not a negative fundamental discriminant");
        }
    }
    [[nodiscard]] std::int64_t discriminant() const noexcept { return d_; }

    /// Kronecker symbol (D | p): 1 split, -1 inert, 0 ramified.
    [[nodiscard]] int kronecker(Prime p) const {
        if (p == 2) {
            if (d_ % 2 == 0) return 0;
            const std::int64_t r = ((d_ % 8) + 8) % 8;
            return (r == 1) ? 1 : -1;
        }
        return ff::legendre(ff::reduce_signed(d_, p), p);
    }

private:
    static bool squarefree(std::int64_t n) {
        n = n < 0 ? -n : n;
        for (std::int64_t k = 2; k * k <= n; ++k) {
            if (n % (k * k) == 0) return false;
        }
        return true;
    }
    static bool is_fundamental_negative(std::int64_t d) {
        if (d >= 0) return false;
        const std::int64_t r = ((d % 4) + 4) % 4;
        if (r == 1) return squarefree(d);
        if (r != 0) return false;
        const std::int64_t m = d / 4;
        const std::int64_t rm = ((m % 4) + 4) % 4;
        return (rm == 2 || rm == 3) && squarefree(m);
    }

    std::int64_t d_;
};

/// Base field of a survey: Q when empty.
using BaseField = std::optional<QuadraticField>;

inline constexpr std::uint64_t kEllipticSurveyCap = 1'000'000;
inline constexpr std::uint64_t kGenus2SurveyCap = 8192;

struct SurveyOptions {
    unsigned workers = 1;
    /// Keep one record per prime (for CSV/JSON per-prime output).
    bool keep_records = false;
    /// Genus 2: also count over F_{p^2} to report e_2 (O(p^2) per prime).
    bool full_lpoly = false;
};

/// One surveyed prime: t is t_p (elliptic) or e_1 (genus 2).
struct PrimeRecord {
    std::uint64_t p;
    std::int64_t t;
    std::optional<std::int64_t> e2;
    double x;
    unsigned multiplicity;
};

class CurveSurvey {
public:
    explicit CurveSurvey(unsigned genus) : acc_(genus) {}

    void add(std::uint64_t p, std::int64_t t, std::optional<std::int64_t> e2, unsigned multiplicity, bool keep) {
        for (unsigned k = 0; k < multiplicity; ++k) acc_.update(t, p);
        if (keep) records_.push_back({p, t, e2, static_cast<double>(t) / std::sqrt(static_cast<double>(p)), multiplicity});
    }
    void skip(std::uint64_t p, std::string reason) { skipped_.push_back({p, std::move(reason)}); }

    void merge(const CurveSurvey& other) {
        acc_.merge(other.acc_);
        records_.insert(records_.end(), other.records_.begin(), other.records_.end());
        skipped_.insert(skipped_.end(), other.skipped_.begin(), other.skipped_.end());
    }

    [[nodiscard]] const stats::TraceAccumulator& accumulator() const noexcept { return acc_; }
    [[nodiscard]] const std::vector<PrimeRecord>& records() const noexcept { return records_; }
    [[nodiscard]] const std::vector<SkippedPrime>& skipped() const noexcept { return skipped_; }

private:
    stats::TraceAccumulator acc_;
    std::vector<PrimeRecord> records_;
    std::vector<SkippedPrime> skipped_;
};

/// Samples t_p / sqrt(p) over good primes 3 < p <= bound. Over a quadratic field only
/// degree-one primes count: each split p contributes two primes of norm p with the same
/// trace, inert and ramified p are dropped.
inline CurveSurvey curve_survey(const EllipticCurve& E, std::uint64_t bound, const BaseField& base = std::nullopt,
                                const SurveyOptions& options = {}) {
    if (bound > kEllipticSurveyCap) throw CapacityError("elliptic surveys are capped at B = 10^6");
    const auto primes = ff::sieve_primes(bound);
    return fold_primes(std::span<const Prime>(primes), options.workers, CurveSurvey(1), [&](CurveSurvey& s, Prime p) {
        if (p <= 3) return;
        unsigned multiplicity = 1;
        if (base) {
            const int k = base->kronecker(p);
            if (k == 0) {
                s.skip(p, "ramified in the base field");
                return;
            }
            if (k < 0) return;
            multiplicity = 2;
        }
        if (!E.has_good_reduction(p)) {
            s.skip(p, "bad reduction");
            return;
        }
        s.add(p, ec_trace(E, p), std::nullopt, multiplicity, options.keep_records);
    });
}

inline CurveSurvey curve_survey(const HyperellipticCurve& C, std::uint64_t bound, const BaseField& base = std::nullopt,
                                const SurveyOptions& options = {}) {
    if (base) throw UnsupportedCombination("genus-2 surveys over a quadratic field are not supported");
    if (bound > kGenus2SurveyCap) throw CapacityError("genus-2 surveys are capped at B = 8192");
    const auto primes = ff::sieve_primes(bound);
    return fold_primes(std::span<const Prime>(primes), options.workers, CurveSurvey(2), [&](CurveSurvey& s, Prime p) {
        if (p <= 3) return;
        if (!C.has_good_reduction(p)) {
            s.skip(p, "bad reduction");
            return;
        }
        if (options.full_lpoly) {
            const LPolynomial L = hyperelliptic_lpoly(C, p);
            s.add(p, -static_cast<std::int64_t>(L[1]), static_cast<std::int64_t>(L[2]), 1, options.keep_records);
            return;
        }
        const std::int64_t e1 = hyperelliptic_trace(C, p);
        if (static_cast<double>(e1) * static_cast<double>(e1) > 16.0 * static_cast<double>(p.value())) {
            throw ConsistencyError("Weil bound violated at p = " + std::to_string(p.value()));
        }
        s.add(p, e1, std::nullopt, 1, options.keep_records);
    });
}

}  // namespace satotate::curves
