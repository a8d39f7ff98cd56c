#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satotate/numeric.hpp"
#include "satotate/stats/histogram.hpp"

namespace satotate::stats {

class EmptyAccumulator : public std::domain_error {
public:
    EmptyAccumulator() : std::domain_error("accumulator holds no samples") {}
};

/// Streaming, mergeable statistics of normalized traces x = t / sqrt(q).
///
/// Keeps compensated power sums S_1..S_10, an exact count of samples whose integer
/// trace was zero, and the raw samples up to kSampleCap. Past the cap the samples are
/// binned into a frozen histogram of default_bin_count(kSampleCap) bins and streaming
/// continues into it.
class TraceAccumulator {
public:
    static constexpr unsigned kMaxPower = 10;
    static constexpr std::size_t kSampleCap = std::size_t{1} << 22;

    /// Accumulator for weight-one traces of a genus-g object; samples lie in [-2g, 2g].
    explicit TraceAccumulator(unsigned genus, bool retain_samples = true)
        : TraceAccumulator(genus, 2 * genus, retain_samples) {
        if (genus == 0) throw std::invalid_argument("use weight_zero() for genus-0 accumulators");
    }

    /// Accumulator for integer traces of a degree-d permutation representation (q = 1).
    static TraceAccumulator weight_zero(unsigned degree, bool retain_samples = true) {
        return TraceAccumulator(0, degree, retain_samples);
    }

    [[nodiscard]] unsigned genus() const noexcept { return genus_; }
    /// Samples lie in [-bound, bound].
    [[nodiscard]] unsigned bound() const noexcept { return bound_; }
    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    [[nodiscard]] std::uint64_t zero_count() const noexcept { return zero_count_; }
    [[nodiscard]] double zero_density() const {
        if (count_ == 0) throw EmptyAccumulator();
        return static_cast<double>(zero_count_) / static_cast<double>(count_);
    }
    [[nodiscard]] double power_sum(unsigned k) const { return sums_.at(k - 1).value(); }
    [[nodiscard]] bool frozen() const noexcept { return frozen_.has_value(); }
    [[nodiscard]] const std::vector<double>& samples() const noexcept { return samples_; }

    /// Fold in the integer trace t at scale q; rejects |t| > bound * sqrt(q).
    void update(std::int64_t t, std::uint64_t q) {
        if (q == 0) throw std::invalid_argument("trace scale q must be positive");
        const auto t2 = static_cast<unsigned __int128>(static_cast<__int128>(t) * t);
        const auto limit = static_cast<unsigned __int128>(bound_) * bound_ * q;
        if (t2 > limit) {
            throw std::invalid_argument("trace " + std::to_string(t) + " violates the bound " + std::to_string(bound_) +
                                        "*sqrt(" + std::to_string(q) + ")");
        }
        const double x = static_cast<double>(t) / std::sqrt(static_cast<double>(q));
        push(std::clamp(x, -static_cast<double>(bound_), static_cast<double>(bound_)), t == 0);
    }

    /// Fold in an already-normalized value, for synthetic samples. exact_zero marks a
    /// sample known to have trace identically zero (e.g. drawn from a zero-trace component).
    void add_normalized(double x, bool exact_zero = false) {
        const double b = bound_;
        if (!(std::abs(x) <= b + 1e-9)) throw std::invalid_argument("normalized trace outside [-bound, bound]");
        push(exact_zero ? 0.0 : std::clamp(x, -b, b), exact_zero);
    }

    /// M_0..M_nmax with M_n = S_n / N.
    [[nodiscard]] std::vector<double> moments(unsigned nmax = kMaxPower) const {
        if (nmax > kMaxPower) throw std::invalid_argument("moments are tracked only through n = 10");
        if (count_ == 0) throw EmptyAccumulator();
        std::vector<double> m(nmax + 1);
        m[0] = 1.0;
        for (unsigned n = 1; n <= nmax; ++n) m[n] = sums_[n - 1].value() / static_cast<double>(count_);
        return m;
    }

    /// Histogram of everything seen so far. nbins defaults to round(sqrt(N)); once frozen,
    /// only the frozen binning is available.
    [[nodiscard]] Histogram histogram(std::optional<std::size_t> nbins = std::nullopt) const {
        if (frozen_) {
            if (nbins && *nbins != frozen_->bins()) {
                throw std::invalid_argument("sample buffer overflowed; histogram is frozen at " +
                                            std::to_string(frozen_->bins()) + " bins");
            }
            return *frozen_;
        }
        if (!retain_) throw std::logic_error("accumulator was created without sample retention");
        return stats::histogram(samples_, -static_cast<double>(bound_), static_cast<double>(bound_), nbins);
    }

    /// Componentwise merge; other's samples are appended after ours.
    void merge(const TraceAccumulator& other) {
        if (other.genus_ != genus_ || other.bound_ != bound_) {
            throw std::invalid_argument("cannot merge accumulators of different genus");
        }
        count_ += other.count_;
        zero_count_ += other.zero_count_;
        for (unsigned k = 0; k < kMaxPower; ++k) sums_[k].add(other.sums_[k]);
        if (!retain_) return;
        if (!other.retain_) {
            retain_ = false;
            samples_.clear();
            frozen_.reset();
            return;
        }
        if (other.frozen_ && !frozen_) freeze();
        if (frozen_) {
            if (other.frozen_) frozen_->merge(*other.frozen_);
            for (double x : other.samples_) frozen_->add(x);
            return;
        }
        for (double x : other.samples_) retain(x);
    }

    friend TraceAccumulator merged(TraceAccumulator a, const TraceAccumulator& b) {
        a.merge(b);
        return a;
    }

private:
    TraceAccumulator(unsigned genus, unsigned bound, bool retain_samples)
        : genus_(genus), bound_(bound), retain_(retain_samples) {
        if (bound == 0) throw std::invalid_argument("trace bound must be positive");
    }

    void push(double x, bool zero) {
        ++count_;
        if (zero) ++zero_count_;
        double power = 1.0;
        for (unsigned k = 0; k < kMaxPower; ++k) {
            power *= x;
            sums_[k].add(power);
        }
        if (retain_) retain(x);
    }

    void retain(double x) {
        if (frozen_) {
            frozen_->add(x);
            return;
        }
        samples_.push_back(x);
        if (samples_.size() > kSampleCap) freeze();
    }

    void freeze() {
        frozen_ = Histogram::uniform(-static_cast<double>(bound_), static_cast<double>(bound_),
                                     default_bin_count(kSampleCap));
        for (double x : samples_) frozen_->add(x);
        samples_.clear();
        samples_.shrink_to_fit();
    }

    unsigned genus_;
    unsigned bound_;
    bool retain_;
    std::uint64_t count_ = 0;
    std::uint64_t zero_count_ = 0;
    std::array<CompensatedSum, kMaxPower> sums_{};
    std::vector<double> samples_;
    std::optional<Histogram> frozen_;
};

}  // namespace satotate::stats
