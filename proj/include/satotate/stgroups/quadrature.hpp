#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "satotate/numeric.hpp"

namespace satotate::stgroups {

/// A compact group whose trace moments can be integrated numerically via the Weyl formula.
struct WeylGroup {
    enum class Family { Symplectic, Unitary };
    Family family;
    unsigned rank;  ///< g for USp(2g); n for U(n), embedded in USp(2n)

    static WeylGroup usp(unsigned g) { return {Family::Symplectic, g}; }
    static WeylGroup unitary(unsigned n) { return {Family::Unitary, n}; }
};

inline constexpr unsigned kMinQuadratureGrid = 64;
inline constexpr unsigned kMaxQuadratureGrid = 4096;

namespace detail {

// One product trapezoid evaluation with N points per angle on [0, 2pi).
//
// USp(2g): (1/g!) prod_{j<k} (2cos t_j - 2cos t_k)^2 prod_j (2/pi) sin^2 t_j dt_j on [0, pi]^g.
// The integrand is even in each angle, so its integral over [0, pi] is (pi/N) times the sum
// over the full periodic grid.
// U(n): (1/n!) prod_{j<k} |e^{it_j} - e^{it_k}|^2 prod_j dt_j/(2pi), trace 2 Re sum e^{it_j}.
inline std::vector<double> weyl_trapezoid(WeylGroup G, unsigned nmax, unsigned N) {
    const unsigned g = G.rank;
    std::vector<double> c(N), w(N);
    for (unsigned k = 0; k < N; ++k) {
        const double t = 2.0 * std::numbers::pi * k / N;
        c[k] = 2.0 * std::cos(t);
        const double s = std::sin(t);
        w[k] = G.family == WeylGroup::Family::Symplectic ? (2.0 / std::numbers::pi) * s * s : 1.0;
    }
    auto pair_factor = [&](unsigned a, unsigned b) {
        if (G.family == WeylGroup::Family::Symplectic) {
            const double d = c[a] - c[b];
            return d * d;
        }
        // |e^{ia} - e^{ib}|^2 = 2 - 2 cos(a - b)
        const unsigned diff = (a + N - b) % N;
        return 2.0 - c[diff];
    };

    std::vector<CompensatedSum> sums(nmax + 1);
    std::vector<unsigned> idx(g, 0);
    std::vector<double> pw(nmax + 1);
    while (true) {
        double weight = 1.0;
        double trace = 0.0;
        for (unsigned j = 0; j < g; ++j) {
            weight *= w[idx[j]];
            trace += c[idx[j]];
            for (unsigned k = j + 1; k < g; ++k) weight *= pair_factor(idx[j], idx[k]);
        }
        if (weight != 0.0) {
            double p = weight;
            for (unsigned n = 0; n <= nmax; ++n) {
                sums[n].add(p);
                p *= trace;
            }
        }
        unsigned j = 0;
        while (j < g && ++idx[j] == N) idx[j++] = 0;
        if (j == g) break;
    }

    double factorial = 1.0;
    for (unsigned j = 2; j <= g; ++j) factorial *= j;
    const double cell = G.family == WeylGroup::Family::Symplectic ? std::numbers::pi / N : 1.0 / N;
    const double scale = std::pow(cell, static_cast<double>(g)) / factorial;
    std::vector<double> out(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) out[n] = sums[n].value() * scale;
    return out;
}

}  // namespace detail

/// Numeric trace moments M_0..M_nmax by Weyl integration. M_0 is the computed total mass, not
/// forced to 1. The grid doubles from `grid` until successive results agree to 1e-9
/// (relative to max(1, |M_n|)), capped at 4096 points per angle.
inline std::vector<double> quadrature_moments(WeylGroup G, unsigned nmax, unsigned grid = kMinQuadratureGrid) {
    const bool supported = (G.family == WeylGroup::Family::Symplectic && G.rank >= 1 && G.rank <= 3) ||
                           (G.family == WeylGroup::Family::Unitary && G.rank == 3);
    if (!supported) throw std::invalid_argument("quadrature_moments: only USp(2), USp(4), USp(6) and U(3) are supported");
    if (grid < kMinQuadratureGrid) throw std::invalid_argument("quadrature_moments: grid must have at least 64 points per angle");

    auto prev = detail::weyl_trapezoid(G, nmax, grid);
    for (unsigned N = grid * 2; N <= kMaxQuadratureGrid; N *= 2) {
        auto cur = detail::weyl_trapezoid(G, nmax, N);
        bool converged = true;
        for (unsigned n = 0; n <= nmax; ++n) {
            if (std::abs(cur[n] - prev[n]) > 1e-9 * std::max(1.0, std::abs(cur[n]))) converged = false;
        }
        prev = std::move(cur);
        if (converged) break;
    }
    return prev;
}

}  // namespace satotate::stgroups
