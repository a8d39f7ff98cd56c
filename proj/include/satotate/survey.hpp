#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "satotate/ff/primes.hpp"

namespace satotate {

/// Worker count from SATOTATE_WORKERS, falling back to 1.
inline unsigned default_worker_count() {
    if (const char* env = std::getenv("SATOTATE_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

/// Splits primes into `workers` contiguous chunks, folds each chunk into its own copy of
/// `init` with fn(state, p), then merges the chunk states in order. State must provide
/// merge(const State&). The result depends on the chunking only through floating-point
/// reassociation inside merge().
template <class State, class Fn>
State fold_primes(std::span<const ff::Prime> primes, unsigned workers, const State& init, Fn fn) {
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, primes.size()))));
    std::vector<State> states(workers, init);
    const std::size_t chunk = (primes.size() + workers - 1) / workers;
    auto run = [&](unsigned w) {
        const std::size_t lo = std::min(primes.size(), w * chunk);
        const std::size_t hi = std::min(primes.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) fn(states[w], primes[i]);
    };
    if (workers == 1) {
        run(0);
        return std::move(states[0]);
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    run(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    State result = std::move(states[0]);
    for (unsigned w = 1; w < workers; ++w) result.merge(states[w]);
    return result;
}

/// A prime skipped by a survey, with the reason.
struct SkippedPrime {
    std::uint64_t p;
    std::string reason;
};

}  // namespace satotate
