#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/ff/factor_pattern.hpp"
#include "satotate/ff/primes.hpp"
#include "satotate/lpoly.hpp"
#include "satotate/moment_sequence.hpp"
#include "satotate/stats/accumulator.hpp"
#include "satotate/survey.hpp"

namespace satotate::artin {

using ff::CycleType;

/// N_f(p^r) = sum_{i | r} i * n_i: roots of f_p lying in F_{p^r}.
inline std::uint64_t weight0_counts(const CycleType& ct, unsigned r) {
    if (r == 0) throw std::invalid_argument("weight0_counts: r must be positive");
    std::uint64_t n = 0;
    for (unsigned i = 1; i <= ct.degree(); ++i) {
        if (r % i == 0) n += static_cast<std::uint64_t>(i) * ct.count(i);
    }
    return n;
}

/// L_p(T) = prod_i (1 - T^i)^{n_i}, the reciprocal characteristic polynomial of the
/// permutation matrix with the given cycle type.
inline LPolynomial weight0_lpoly(const CycleType& ct) {
    std::vector<BigInt> poly{1};
    for (unsigned i = 1; i <= ct.degree(); ++i) {
        for (unsigned k = 0; k < ct.count(i); ++k) {
            std::vector<BigInt> next(poly.size() + i, 0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j];
                next[j + i] -= poly[j];
            }
            poly = std::move(next);
        }
    }
    return LPolynomial(std::move(poly), 0);
}

/// A permutation of {0..d-1}, as the list of images.
using Permutation = std::vector<unsigned>;

/// Permutation of degree d from a 1-based cycle, e.g. cycle(3, {1, 2, 3}).
inline Permutation cycle(unsigned d, const std::vector<unsigned>& points) {
    Permutation perm(d);
    for (unsigned i = 0; i < d; ++i) perm[i] = i;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const unsigned from = points[k];
        const unsigned to = points[(k + 1) % points.size()];
        if (from < 1 || from > d || to < 1 || to > d) throw std::invalid_argument("cycle point out of range");
        perm[from - 1] = to - 1;
    }
    return perm;
}

/// Subgroup of S_d given by generators.
class PermGroup {
public:
    static constexpr std::uint64_t kMaxOrder = 10'000'000;

    PermGroup(unsigned degree, std::vector<Permutation> generators)
        : degree_(degree), generators_(std::move(generators)) {
        if (degree_ == 0 || degree_ > 255) throw std::invalid_argument("permutation degree must be in [1, 255]");
        for (const auto& g : generators_) {
            if (g.size() != degree_) throw std::invalid_argument("generator has the wrong degree");
            std::vector<bool> seen(degree_, false);
            for (unsigned img : g) {
                if (img >= degree_ || seen[img]) throw std::invalid_argument("generator is not a permutation");
                seen[img] = true;
            }
        }
    }

    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] const std::vector<Permutation>& generators() const noexcept { return generators_; }

    /// Enumerates the group by closure under right multiplication by generators.
    template <class Visit>
    std::uint64_t for_each_element(Visit visit) const {
        auto key = [](const Permutation& p) { return std::string(p.begin(), p.end()); };
        Permutation id(degree_);
        for (unsigned i = 0; i < degree_; ++i) id[i] = i;
        std::unordered_set<std::string> seen{key(id)};
        std::vector<Permutation> frontier{id};
        visit(id);
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& g : frontier) {
                for (const auto& s : generators_) {
                    Permutation h(degree_);
                    for (unsigned i = 0; i < degree_; ++i) h[i] = s[g[i]];
                    if (seen.insert(key(h)).second) {
                        if (seen.size() > kMaxOrder) throw CapacityError("permutation group order exceeds 10^7");
                        visit(h);
                        next.push_back(std::move(h));
                    }
                }
            }
            frontier = std::move(next);
        }
        return seen.size();
    }

private:
    unsigned degree_;
    std::vector<Permutation> generators_;
};

/// Exact distribution of the number of fixed points (the trace of the permutation matrix).
struct TraceDistribution {
    unsigned degree = 0;
    std::uint64_t order = 0;
    /// probabilities[i] = proportion of elements with exactly i fixed points, 0 <= i <= d.
    std::vector<Rational> probabilities;
    MomentSequence moments;
};

inline TraceDistribution perm_group_distribution(const PermGroup& group, unsigned nmax) {
    const unsigned d = group.degree();
    std::vector<std::uint64_t> by_trace(d + 1, 0);
    const std::uint64_t order = group.for_each_element([&](const Permutation& g) {
        unsigned fixed = 0;
        for (unsigned i = 0; i < d; ++i) fixed += g[i] == i ? 1U : 0U;
        ++by_trace[fixed];
    });

    TraceDistribution dist;
    dist.degree = d;
    dist.order = order;
    for (unsigned i = 0; i <= d; ++i) dist.probabilities.emplace_back(by_trace[i], order);
    std::vector<Rational> m(nmax + 1, 0);
    m[0] = 1;  // E[tr^0] = 1, including for traces equal to zero
    for (unsigned n = 1; n <= nmax; ++n) {
        Rational acc = 0;
        for (unsigned i = 0; i <= d; ++i) acc += dist.probabilities[i] * Rational(BigInt(boost::multiprecision::pow(BigInt(i), n)));
        m[n] = acc;
    }
    dist.moments = MomentSequence(std::move(m));
    return dist;
}

/// How surveys treat primes where f mod p is not squarefree or drops degree.
enum class SurveyConvention {
    /// Skip p = 2; at ramified primes count distinct roots of f mod p. Reproduces the
    /// published c_i(B) table.
    PaperTable,
    /// Use every prime; skip ramified primes entirely.
    Clean,
};

inline SurveyConvention parse_convention(const std::string& s) {
    if (s == "paper-table") return SurveyConvention::PaperTable;
    if (s == "clean") return SurveyConvention::Clean;
    throw std::invalid_argument("unknown survey convention '" + s + "'");
}

/// Result of counting N_f(p) over primes p <= B.
class ArtinSurvey {
public:
    explicit ArtinSurvey(unsigned degree) : counts_(degree + 1, 0), acc_(stats::TraceAccumulator::weight_zero(degree)) {}

    void record(unsigned n_roots) {
        ++counts_.at(n_roots);
        ++total_;
        acc_.update(static_cast<std::int64_t>(n_roots), 1);
    }
    void skip(std::uint64_t p, std::string reason) { skipped_.push_back({p, std::move(reason)}); }

    void merge(const ArtinSurvey& other) {
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        total_ += other.total_;
        acc_.merge(other.acc_);
        skipped_.insert(skipped_.end(), other.skipped_.begin(), other.skipped_.end());
    }

    [[nodiscard]] unsigned degree() const noexcept { return static_cast<unsigned>(counts_.size() - 1); }
    [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] const stats::TraceAccumulator& accumulator() const noexcept { return acc_; }
    /// Primes routed around the normal path (skipped, or counted as ramified).
    [[nodiscard]] const std::vector<SkippedPrime>& skipped() const noexcept { return skipped_; }

    /// Exact proportions c_i(B).
    [[nodiscard]] std::vector<Rational> ratios() const {
        if (total_ == 0) throw stats::EmptyAccumulator();
        std::vector<Rational> c;
        for (auto n : counts_) c.emplace_back(n, total_);
        return c;
    }

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
    stats::TraceAccumulator acc_;
    std::vector<SkippedPrime> skipped_;
};

/// Proportions c_i(B) of primes p <= bound with N_f(p) = i.
inline ArtinSurvey artin_survey(const ff::IntPoly& f, std::uint64_t bound, SurveyConvention convention,
                                unsigned workers = 1) {
    const int d = ff::degree(f);
    if (d < 1) throw std::invalid_argument("artin_survey: polynomial must have degree >= 1");
    const auto primes = ff::sieve_primes(bound);
    return fold_primes(std::span<const ff::Prime>(primes), workers, ArtinSurvey(static_cast<unsigned>(d)),
                       [&](ArtinSurvey& s, ff::Prime p) {
                           if (convention == SurveyConvention::PaperTable && p == 2) return;
                           try {
                               s.record(ff::factorization_pattern(f, p).count(1));
                           } catch (const PrimeError& e) {
                               const auto fp = ff::FpPoly::from_int(f, p);
                               if (convention == SurveyConvention::Clean || fp.is_zero()) {
                                   s.skip(p, std::string("skipped: ") + e.what());
                                   return;
                               }
                               s.record(ff::distinct_root_count(fp));
                               s.skip(p, std::string("counted distinct roots: ") + e.what());
                           }
                       });
}

}  // namespace satotate::artin
