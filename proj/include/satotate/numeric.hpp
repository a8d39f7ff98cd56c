#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace satotate {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// C(n, n/2), zero for odd n.
inline BigInt central_binomial(unsigned n) { return (n % 2 != 0) ? BigInt(0) : binomial(n, n / 2); }

/// 2/(n+2) * C(n, n/2): the Catalan number C_{n/2} for even n, zero for odd n.
inline BigInt catalan_moment(unsigned n) {
    if (n % 2 != 0) return 0;
    return central_binomial(n) / (n / 2 + 1);
}

/// (n-1)!! for even n, zero for odd n (with (-1)!! = 1).
inline BigInt double_factorial_moment(unsigned n) {
    if (n % 2 != 0) return 0;
    BigInt r = 1;
    for (unsigned k = n == 0 ? 0 : n - 1; k > 1; k -= 2) r *= k;
    return r;
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Neumaier compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    void add(const CompensatedSum& other) noexcept {
        add(other.sum_);
        add(other.comp_);
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace satotate
