#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "satotate/stgroups/catalog.hpp"

namespace satotate::stgroups {

/// One random conjugacy class, as eigenangles theta_j in [0, pi] (one per 2x2 block).
struct EigenangleSample {
    std::vector<double> angles;
    /// Drawn from a component on which the trace vanishes identically, e.g. the non-identity
    /// component of N(U(1)). Lets consumers count exact zeros without a floating threshold.
    bool trace_identically_zero = false;

    /// sum_j 2 cos(theta_j); exactly 0 for zero-trace components.
    [[nodiscard]] double trace() const {
        if (trace_identically_zero) return 0.0;
        double t = 0.0;
        for (double th : angles) t += 2.0 * std::cos(th);
        return t;
    }
};

/// Haar-distributed eigenangles for U(1), SU(2), N(U(1)), scaled copies and products of those,
/// USp(4) and USp(6). USp(2g) uses rejection from the uniform cube against the Weyl density,
/// with proposal bound (max on a 64^g grid) * 1.01.
///
/// Owns its generator; use one instance per thread.
class EigenangleSampler {
public:
    EigenangleSampler(STGroupSpec group, std::uint64_t seed) : group_(std::move(group)), rng_(seed) {
        check_supported(group_);
    }

    [[nodiscard]] const STGroupSpec& group() const noexcept { return group_; }

    EigenangleSample next() {
        EigenangleSample s;
        s.angles.reserve(group_.genus());
        s.trace_identically_zero = draw(group_, s.angles);
        return s;
    }

    /// Weyl density of USp(2g) on [0, pi]^g.
    static double usp_density(std::span<const double> theta) {
        const std::size_t g = theta.size();
        double f = 1.0;
        for (std::size_t j = 0; j < g; ++j) {
            const double s = std::sin(theta[j]);
            f *= 2.0 / std::numbers::pi * s * s / static_cast<double>(j + 1);
            for (std::size_t k = j + 1; k < g; ++k) {
                const double d = 2.0 * std::cos(theta[j]) - 2.0 * std::cos(theta[k]);
                f *= d * d;
            }
        }
        return f;
    }

private:
    static bool is_usp(const STGroupSpec& G) {
        return G.kind() == STGroupSpec::Kind::Catalog && (G.name() == "USp(4)" || G.name() == "USp(6)");
    }

    static void check_supported(const STGroupSpec& G) {
        switch (G.kind()) {
            case STGroupSpec::Kind::Atom:
            case STGroupSpec::Kind::Scaled:
                return;
            case STGroupSpec::Kind::Product:
                for (const auto& f : G.factors()) check_supported(f);
                return;
            case STGroupSpec::Kind::Catalog:
                if (G.name() == "N(U(1))" || is_usp(G)) return;
                break;
        }
        throw std::invalid_argument("sampling is not supported for " + G.name());
    }

    double uniform_angle() { return std::uniform_real_distribution<double>(0.0, std::numbers::pi)(rng_); }

    double atom_angle(Atom a) {
        if (a == Atom::U1) return uniform_angle();
        // (2/pi) sin^2 on [0, pi]; maximum 2/pi
        const double bound = 2.0 / std::numbers::pi * 1.01;
        std::uniform_real_distribution<double> u(0.0, bound);
        while (true) {
            const double th = uniform_angle();
            const double s = std::sin(th);
            if (u(rng_) < 2.0 / std::numbers::pi * s * s) return th;
        }
    }

    double usp_bound(unsigned g) {
        if (bounds_[g] > 0.0) return bounds_[g];
        constexpr unsigned kGrid = 64;
        std::vector<double> th(g);
        std::vector<unsigned> idx(g, 0);
        double best = 0.0;
        while (true) {
            for (unsigned j = 0; j < g; ++j) th[j] = std::numbers::pi * (idx[j] + 0.5) / kGrid;
            best = std::max(best, usp_density(th));
            unsigned j = 0;
            while (j < g && ++idx[j] == kGrid) idx[j++] = 0;
            if (j == g) break;
        }
        bounds_[g] = best * 1.01;
        return bounds_[g];
    }

    void usp_angles(unsigned g, std::vector<double>& out) {
        const double bound = usp_bound(g);
        std::uniform_real_distribution<double> u(0.0, bound);
        std::vector<double> th(g);
        while (true) {
            for (auto& t : th) t = uniform_angle();
            if (u(rng_) < usp_density(th)) break;
        }
        out.insert(out.end(), th.begin(), th.end());
    }

    // Appends the angles of one draw; returns true if the trace is identically zero.
    bool draw(const STGroupSpec& G, std::vector<double>& out) {
        switch (G.kind()) {
            case STGroupSpec::Kind::Atom:
                out.push_back(atom_angle(G.atom_kind()));
                return false;
            case STGroupSpec::Kind::Scaled: {
                const double th = atom_angle(G.atom_kind());
                out.insert(out.end(), G.multiplicity(), th);
                return false;
            }
            case STGroupSpec::Kind::Product: {
                bool all_zero = true;
                for (const auto& f : G.factors()) all_zero = draw(f, out) && all_zero;
                return all_zero;
            }
            case STGroupSpec::Kind::Catalog:
                break;
        }
        if (G.name() == "N(U(1))") {
            if (std::bernoulli_distribution(0.5)(rng_)) {
                out.push_back(uniform_angle());
                return false;
            }
            out.push_back(std::numbers::pi / 2.0);
            return true;
        }
        usp_angles(G.genus(), out);
        return false;
    }

    STGroupSpec group_;
    std::mt19937_64 rng_;
    std::array<double, 4> bounds_{};
};

/// `count` reproducible samples from `group` using generator seed `seed`.
inline std::vector<EigenangleSample> sample_eigenangles(const STGroupSpec& group, std::size_t count, std::uint64_t seed) {
    EigenangleSampler sampler(group, seed);
    std::vector<EigenangleSample> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
}

}  // namespace satotate::stgroups
