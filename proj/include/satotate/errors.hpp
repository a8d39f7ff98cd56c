#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace satotate {

/// A computation would exceed a fixed table size, closure cap or survey bound.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Operation not available in the given characteristic (e.g. quadratic characters mod 2).
class UnsupportedCharacteristic : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Base class for per-prime failures; carries the offending prime so surveys can route it.
class PrimeError : public std::domain_error {
public:
    PrimeError(const std::string& what, std::uint64_t p) : std::domain_error(what), prime_(p) {}
    [[nodiscard]] std::uint64_t prime() const noexcept { return prime_; }

private:
    std::uint64_t prime_;
};

/// f mod p has a repeated factor (p divides the discriminant).
class NotSquarefree : public PrimeError {
public:
    explicit NotSquarefree(std::uint64_t p)
        : PrimeError("polynomial is not squarefree mod " + std::to_string(p), p) {}
};

/// The reduction mod p is degenerate: leading coefficient vanishes or the curve is singular.
class BadReduction : public PrimeError {
public:
    explicit BadReduction(std::uint64_t p)
        : PrimeError("bad reduction at p = " + std::to_string(p), p) {}
    BadReduction(const std::string& what, std::uint64_t p) : PrimeError(what, p) {}
};

/// The requested pairing of inputs is not supported (e.g. genus-2 surveys over a quadratic field).
class UnsupportedCombination : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold by construction failed; indicates a counting bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace satotate
