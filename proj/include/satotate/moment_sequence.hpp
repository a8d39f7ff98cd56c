#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "satotate/numeric.hpp"

namespace satotate {

/// Exact moments M_0..M_nmax of a trace measure. M_0 = 1 always.
class MomentSequence {
public:
    MomentSequence() : values_{Rational(1)} {}
    explicit MomentSequence(std::vector<Rational> values) : values_(std::move(values)) {
        if (values_.empty() || values_.front() != 1) throw std::invalid_argument("moment sequence must start with M_0 = 1");
    }
    static MomentSequence from_integers(const std::vector<BigInt>& values) {
        return MomentSequence(std::vector<Rational>(values.begin(), values.end()));
    }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] unsigned nmax() const noexcept { return static_cast<unsigned>(values_.size() - 1); }
    [[nodiscard]] const Rational& operator[](std::size_t n) const { return values_.at(n); }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }

    /// M_n as an integer; throws if it is not one.
    [[nodiscard]] BigInt integer(std::size_t n) const {
        const Rational& v = values_.at(n);
        if (!is_integer(v)) throw std::domain_error("moment M_" + std::to_string(n) + " is not an integer");
        return boost::multiprecision::numerator(v);
    }
    [[nodiscard]] bool all_integers() const {
        for (const auto& v : values_) {
            if (!is_integer(v)) return false;
        }
        return true;
    }
    [[nodiscard]] std::vector<BigInt> integers() const {
        std::vector<BigInt> out;
        out.reserve(values_.size());
        for (std::size_t n = 0; n < values_.size(); ++n) out.push_back(integer(n));
        return out;
    }
    [[nodiscard]] MomentSequence truncated(unsigned nmax) const {
        if (nmax > this->nmax()) throw std::invalid_argument("cannot extend a moment sequence by truncation");
        return MomentSequence(std::vector<Rational>(values_.begin(), values_.begin() + nmax + 1));
    }

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

private:
    std::vector<Rational> values_;
};

/// Comma-joined rendering, e.g. "1,0,1,0,2". Non-integers print as p/q.
inline std::string to_string(const MomentSequence& m) {
    std::string out;
    for (std::size_t n = 0; n < m.size(); ++n) {
        if (n) out += ',';
        out += m[n].str();
    }
    return out;
}

}  // namespace satotate
