#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace satotate::stats {

/// Binned counts. Bins are [e_i, e_{i+1}) except the last, which is closed.
class Histogram {
public:
    explicit Histogram(std::vector<double> edges) : edges_(std::move(edges)) {
        if (edges_.size() < 2) throw std::invalid_argument("histogram needs at least one bin");
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            if (!(edges_[i] > edges_[i - 1])) throw std::invalid_argument("histogram edges must be strictly increasing");
        }
        counts_.assign(edges_.size() - 1, 0);
    }

    static Histogram uniform(double lo, double hi, std::size_t nbins) {
        if (nbins == 0) throw std::invalid_argument("histogram: nbins must be positive");
        std::vector<double> edges(nbins + 1);
        for (std::size_t i = 0; i <= nbins; ++i) {
            edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(nbins);
        }
        edges.back() = hi;
        return Histogram(std::move(edges));
    }

    [[nodiscard]] std::size_t bins() const noexcept { return counts_.size(); }
    [[nodiscard]] const std::vector<double>& edges() const noexcept { return edges_; }
    [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] double lo(std::size_t i) const { return edges_.at(i); }
    [[nodiscard]] double hi(std::size_t i) const { return edges_.at(i + 1); }
    [[nodiscard]] double frequency(std::size_t i) const {
        return total_ == 0 ? 0.0 : static_cast<double>(counts_.at(i)) / static_cast<double>(total_);
    }

    /// Index of the bin holding x, or nullopt outside [e_0, e_last].
    [[nodiscard]] std::optional<std::size_t> bin_of(double x) const noexcept {
        if (!(x >= edges_.front() && x <= edges_.back())) return std::nullopt;
        if (x == edges_.back()) return counts_.size() - 1;
        const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
        return static_cast<std::size_t>(it - edges_.begin()) - 1;
    }

    void add(double x, std::uint64_t count = 1) {
        const auto bin = bin_of(x);
        if (!bin) throw std::out_of_range("histogram sample outside the binned range");
        counts_[*bin] += count;
        total_ += count;
    }

    void merge(const Histogram& other) {
        if (other.edges_ != edges_) throw std::invalid_argument("cannot merge histograms with different edges");
        for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
        total_ += other.total_;
    }

private:
    std::vector<double> edges_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Default bin count: round(sqrt(N)), at least one.
inline std::size_t default_bin_count(std::size_t n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n)))));
}

/// Equal-width histogram of samples over [lo, hi].
inline Histogram histogram(std::span<const double> samples, double lo, double hi,
                           std::optional<std::size_t> nbins = std::nullopt) {
    Histogram h = Histogram::uniform(lo, hi, nbins.value_or(default_bin_count(samples.size())));
    for (double x : samples) h.add(x);
    return h;
}

}  // namespace satotate::stats
