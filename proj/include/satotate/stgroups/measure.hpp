#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "satotate/numeric.hpp"
#include "satotate/stgroups/catalog.hpp"

namespace satotate::stgroups {

/// Eigenangle measure on [0, pi] for a genus-1 group: an absolutely continuous part plus atoms.
struct TraceMeasure1D {
    struct PointMass {
        double theta;
        double mass;
    };

    /// Density of the continuous part with respect to d(theta).
    std::function<double(double)> density;
    /// Continuous mass of trace values in [-2, t], for t in [-2, 2].
    std::function<double(double)> trace_cdf;
    std::vector<PointMass> atoms;

    /// Continuous mass by composite Simpson on [0, pi], plus atoms.
    [[nodiscard]] double total_mass(unsigned intervals = 1 << 14) const {
        const double h = std::numbers::pi / intervals;
        CompensatedSum s;
        for (unsigned i = 0; i <= intervals; ++i) {
            const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 != 0 ? 4.0 : 2.0);
            s.add(w * density(i * h));
        }
        double mass = s.value() * h / 3.0;
        for (const auto& a : atoms) mass += a.mass;
        return mass;
    }
};

namespace detail {

inline double clamp_trace(double t) { return std::clamp(t, -2.0, 2.0); }

// mu_U(1) = d(theta)/pi; trace density 1/(pi sqrt(4 - t^2)).
inline double u1_cdf(double t) {
    t = clamp_trace(t);
    return 0.5 + std::asin(t / 2.0) / std::numbers::pi;
}

// mu_SU(2) = (2/pi) sin^2(theta) d(theta); semicircle trace density sqrt(4 - t^2)/(2 pi).
inline double su2_cdf(double t) {
    t = clamp_trace(t);
    return 0.5 + t * std::sqrt(4.0 - t * t) / (4.0 * std::numbers::pi) + std::asin(t / 2.0) / std::numbers::pi;
}

}  // namespace detail

/// Trace measure of U(1), SU(2) or N(U(1)).
inline TraceMeasure1D trace_measure(const STGroupSpec& G) {
    const bool atom = G.kind() == STGroupSpec::Kind::Atom;
    if (atom && G.atom_kind() == Atom::U1) {
        return {[](double) { return 1.0 / std::numbers::pi; }, detail::u1_cdf, {}};
    }
    if (atom && G.atom_kind() == Atom::SU2) {
        return {[](double th) {
                    const double s = std::sin(th);
                    return 2.0 / std::numbers::pi * s * s;
                },
                detail::su2_cdf, {}};
    }
    if (G.kind() == STGroupSpec::Kind::Catalog && G.name() == "N(U(1))") {
        // (1/(2 pi)) d(theta) + (1/2) delta_{pi/2}
        return {[](double) { return 0.5 / std::numbers::pi; }, [](double t) { return 0.5 * detail::u1_cdf(t); },
                {{std::numbers::pi / 2.0, 0.5}}};
    }
    throw std::invalid_argument("trace_measure: only U(1), SU(2) and N(U(1)) have a 1D trace measure here");
}

/// Mass of the trace pushforward in each bin [e_i, e_{i+1}) (last bin closed). Atoms at
/// theta go to the bin containing 2 cos(theta). Masses sum to 1 when the edges span [-2, 2].
inline std::vector<double> theoretical_trace_histogram(const TraceMeasure1D& mu, std::span<const double> edges) {
    if (edges.size() < 2) throw std::invalid_argument("histogram needs at least two edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!std::isfinite(edges[i]) || !std::isfinite(edges[i + 1]) || !(edges[i] < edges[i + 1])) {
            throw std::invalid_argument("histogram edges must be finite and strictly increasing");
        }
    }
    const std::size_t nbins = edges.size() - 1;
    std::vector<double> mass(nbins);
    for (std::size_t i = 0; i < nbins; ++i) mass[i] = mu.trace_cdf(edges[i + 1]) - mu.trace_cdf(edges[i]);
    for (const auto& a : mu.atoms) {
        const double t = std::abs(std::cos(a.theta)) < 1e-15 ? 0.0 : 2.0 * std::cos(a.theta);
        if (t < edges.front() || t > edges.back()) continue;
        auto it = std::upper_bound(edges.begin(), edges.end(), t);
        std::size_t bin = static_cast<std::size_t>(it - edges.begin()) - 1;
        if (bin == nbins) bin = nbins - 1;  // t equals the last edge
        mass[bin] += a.mass;
    }
    return mass;
}

inline std::vector<double> theoretical_trace_histogram(const STGroupSpec& G, std::span<const double> edges) {
    return theoretical_trace_histogram(trace_measure(G), edges);
}

}  // namespace satotate::stgroups
