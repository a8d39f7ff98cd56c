#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/moment_sequence.hpp"
#include "satotate/numeric.hpp"

namespace satotate::stgroups {

/// The two connected building blocks in genus 1.
enum class Atom { U1, SU2 };

inline std::string to_string(Atom a) { return a == Atom::U1 ? "U(1)" : "SU(2)"; }

/// b_n = C(n, n/2) for U(1), c_n = 2/(n+2) C(n, n/2) for SU(2); zero at odd n.
inline MomentSequence atom_moments(Atom kind, unsigned nmax) {
    std::vector<BigInt> m;
    m.reserve(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) m.push_back(kind == Atom::U1 ? central_binomial(n) : catalan_moment(n));
    return MomentSequence::from_integers(m);
}

/// Moments of m * tr: the trace of the diagonal m-fold copy of a group.
inline MomentSequence scale_moments(const MomentSequence& M, unsigned m) {
    if (m == 0) throw std::invalid_argument("scale_moments: multiplicity must be positive");
    std::vector<Rational> out;
    out.reserve(M.size());
    BigInt factor = 1;
    for (std::size_t n = 0; n < M.size(); ++n) {
        out.push_back(M[n] * Rational(factor));
        factor *= m;
    }
    return MomentSequence(std::move(out));
}

/// Binomial convolution: moments of tr_1 + tr_2 for independent factors of a product group.
inline MomentSequence convolve_moments(const MomentSequence& a, const MomentSequence& b) {
    if (a.size() != b.size()) throw std::invalid_argument("convolve_moments: sequences have different lengths");
    std::vector<Rational> out(a.size(), 0);
    for (unsigned n = 0; n < a.size(); ++n) {
        for (unsigned r = 0; r <= n; ++r) out[n] += Rational(binomial(n, r)) * a[r] * b[n - r];
    }
    return MomentSequence(std::move(out));
}

inline constexpr unsigned kMaxWalkGenus = 8;
inline constexpr unsigned kMaxWalkLength = 30;

/// M_n[tr] for USp(2g) as the number of closed walks of length n from the origin with steps
/// +-e_i, staying in x_1 >= ... >= x_g >= 0.
inline MomentSequence walk_moments_usp(unsigned g, unsigned nmax) {
    if (g == 0) throw std::invalid_argument("walk_moments_usp: genus must be positive");
    if (g > kMaxWalkGenus || nmax > kMaxWalkLength) {
        throw CapacityError("walk_moments_usp: requires g <= 8 and nmax <= 30");
    }
    // Coordinates never exceed nmax / 2 on a returning walk, so one byte per coordinate is plenty.
    using Layer = std::unordered_map<std::string, BigInt>;
    Layer layer{{std::string(g, '\0'), BigInt(1)}};
    std::vector<BigInt> m(nmax + 1, 0);
    m[0] = 1;
    for (unsigned s = 1; s <= nmax; ++s) {
        Layer next;
        const unsigned budget = nmax - s;  // steps left to get home
        for (const auto& [pt, ways] : layer) {
            for (unsigned i = 0; i < g; ++i) {
                for (int dir : {1, -1}) {
                    std::string q = pt;
                    const int v = static_cast<int>(q[i]) + dir;
                    if (v < 0) continue;
                    if (i > 0 && v > static_cast<int>(q[i - 1])) continue;
                    if (i + 1 < g && v < static_cast<int>(q[i + 1])) continue;
                    q[i] = static_cast<char>(v);
                    unsigned norm = 0;
                    for (char c : q) norm += static_cast<unsigned>(c);
                    if (norm > budget) continue;
                    next[q] += ways;
                }
            }
        }
        layer = std::move(next);
        if (auto it = layer.find(std::string(g, '\0')); it != layer.end()) m[s] = it->second;
    }
    return MomentSequence::from_integers(m);
}

/// c_n c_{n+4} - c_{n+2}^2, the n-th trace moment of USp(4).
inline BigInt usp4_closed_form(unsigned n) {
    const BigInt c2 = catalan_moment(n + 2);
    return catalan_moment(n) * catalan_moment(n + 4) - c2 * c2;
}

}  // namespace satotate::stgroups
