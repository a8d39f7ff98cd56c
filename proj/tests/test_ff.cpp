#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "satotate/errors.hpp"
#include "satotate/ff/factor_pattern.hpp"
#include "satotate/ff/field.hpp"
#include "satotate/ff/modular.hpp"
#include "satotate/ff/poly.hpp"
#include "satotate/ff/primes.hpp"

using namespace satotate;
using namespace satotate::ff;

namespace {

FpPoly poly(std::vector<std::int64_t> c, std::uint64_t p) { return FpPoly::from_int(c, Prime(p)); }

std::vector<std::uint64_t> values(const std::vector<Prime>& ps) {
    std::vector<std::uint64_t> v;
    for (auto p : ps) v.push_back(p.value());
    return v;
}

}  // namespace

TEST(Modular, MulModMatchesWideProduct) {
    std::mt19937_64 rng(7);
    const std::uint64_t m = (std::uint64_t{1} << 61) - 1;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t a = rng() % m;
        const std::uint64_t b = rng() % m;
        const auto expect = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
        EXPECT_EQ(mul_mod(a, b, m), expect);
    }
}

TEST(Modular, MillerRabinAgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime_u64(n), oracle::is_prime(static_cast<std::int64_t>(n))) << n;
    EXPECT_TRUE(is_prime_u64((std::uint64_t{1} << 61) - 1));
    EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Primes, SmallBounds) {
    EXPECT_EQ(values(sieve_primes(10)), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_TRUE(sieve_primes(1).empty());
    EXPECT_TRUE(sieve_primes(0).empty());
    EXPECT_EQ(values(sieve_primes(2)), (std::vector<std::uint64_t>{2}));
}

TEST(Primes, CountUpToOneMillion) {
    const auto ps = sieve_primes(1'000'000);
    EXPECT_EQ(ps.size(), 78498U);
    const auto ref = oracle::primes_upto(1'000'000);
    ASSERT_EQ(ps.size(), ref.size());
    for (std::size_t i = 0; i < ps.size(); ++i) ASSERT_EQ(ps[i].value(), static_cast<std::uint64_t>(ref[i]));
}

TEST(Primes, SegmentBoundaries) {
    // bounds straddling internal segment sizes
    for (std::uint64_t b : {65535ULL, 65536ULL, 65537ULL, 131071ULL, 262147ULL}) {
        const auto ps = sieve_primes(b);
        const auto ref = oracle::primes_upto(static_cast<std::int64_t>(b));
        EXPECT_EQ(ps.size(), ref.size()) << b;
        EXPECT_LE(ps.back().value(), b);
    }
}

TEST(Primes, CapacityAndValidation) {
    EXPECT_THROW(sieve_primes(kMaxSieveBound + 1), CapacityError);
    EXPECT_THROW(Prime(1), std::invalid_argument);
    EXPECT_THROW(Prime(91), std::invalid_argument);
    EXPECT_EQ(Prime(97).value(), 97U);
}

TEST(QuadraticCharacter, Examples) {
    EXPECT_EQ(quadratic_character(Fp(4, Prime(5))), 1);
    EXPECT_EQ(quadratic_character(Fp(3, Prime(5))), -1);
    EXPECT_EQ(quadratic_character(Fp(0, Prime(7))), 0);
    EXPECT_THROW(quadratic_character(Fp(1, Prime(2))), UnsupportedCharacteristic);
}

TEST(QuadraticCharacter, MatchesSquareCountAndIsMultiplicative) {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
        const Prime P(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            const int chi = quadratic_character(Fp::from_residue(a, P));
            EXPECT_EQ(chi + 1, oracle::sqrt_count(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p))) << a << " mod " << p;
            for (std::uint64_t b = 1; b < p; ++b) {
                if (a == 0) break;
                EXPECT_EQ(quadratic_character(Fp::from_residue(a * b, P)), chi * quadratic_character(Fp::from_residue(b, P)));
            }
        }
    }
}

TEST(Fp2, MatchesIndependentExtensionOverF25) {
    const Prime P(5);
    const oracle::QuadraticExtension ref(5);
    EXPECT_EQ(smallest_nonresidue(P), static_cast<std::uint64_t>(ref.n));
    std::vector<std::int64_t> square_count(25, 0);
    for (std::int64_t u = 0; u < 5; ++u) {
        for (std::int64_t v = 0; v < 5; ++v) ++square_count[ref.index(ref.mul({u, v}, {u, v}))];
    }
    for (std::uint64_t a0 = 0; a0 < 5; ++a0) {
        for (std::uint64_t a1 = 0; a1 < 5; ++a1) {
            const Fp2 a(a0, a1, P);
            for (std::uint64_t b0 = 0; b0 < 5; ++b0) {
                for (std::uint64_t b1 = 0; b1 < 5; ++b1) {
                    const auto prod = a * Fp2(b0, b1, P);
                    const auto want = ref.mul({static_cast<std::int64_t>(a0), static_cast<std::int64_t>(a1)},
                                              {static_cast<std::int64_t>(b0), static_cast<std::int64_t>(b1)});
                    ASSERT_EQ(prod.c0(), static_cast<std::uint64_t>(want.u));
                    ASSERT_EQ(prod.c1(), static_cast<std::uint64_t>(want.v));
                }
            }
            // the norm character detects squares of F_25
            const auto idx = static_cast<std::size_t>(a0 * 5 + a1);
            EXPECT_EQ(quadratic_character(a) + 1, square_count[idx]) << a0 << "+" << a1 << "w";
        }
    }
}

TEST(Fp2, FrobeniusIsConjugation) {
    const Prime P(13);
    for (std::uint64_t a0 = 0; a0 < 13; ++a0) {
        const Fp2 a(a0, 5, P);
        const Fp2 frob = a.pow(13);
        EXPECT_EQ(frob.c0(), a0);
        EXPECT_EQ(frob.c1(), 13U - 5U);
    }
}

TEST(PolyPowmod, Examples) {
    const auto m = poly({1, 0, 1}, 3);  // x^2 + 1 over F_3
    EXPECT_EQ(poly_powmod(FpPoly::x(Prime(3)), 3, m), poly({0, 2}, 3));
    const auto m2 = poly({1, 1, 0, 1}, 7);
    EXPECT_EQ(poly_powmod(FpPoly::x(Prime(7)), 1, m2), FpPoly::x(Prime(7)));
    EXPECT_EQ(poly_powmod(poly({3, 4}, 7), 0, m2), FpPoly::constant(1, Prime(7)));
    EXPECT_THROW(poly_powmod(FpPoly::x(Prime(7)), 2, FpPoly(Prime(7))), std::invalid_argument);
}

TEST(PolyPowmod, IteratedFrobeniusMatchesDirectPower) {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 31ULL, 97ULL}) {
        const Prime P(p);
        for (int trial = 0; trial < 20; ++trial) {
            const int d = 1 + static_cast<int>(rng() % 8);
            std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
            c.back() = 1;
            const auto g = poly(c, p);
            FpPoly r = FpPoly::x(P);
            std::uint64_t pi = 1;
            for (int i = 1; i <= 3; ++i) {
                r = poly_powmod(r, p, g);
                pi *= p;
                // direct: repeated multiplication by x, pi times (pi <= 97^3)
                FpPoly direct = FpPoly::constant(1, P) % g;
                const FpPoly x = FpPoly::x(P) % g;
                if (pi <= 20000) {
                    for (std::uint64_t k = 0; k < pi; ++k) direct = (direct * x) % g;
                    ASSERT_EQ(r, direct) << "p=" << p << " i=" << i;
                }
            }
        }
    }
}

TEST(PolyGcd, Examples) {
    EXPECT_EQ(poly_gcd(poly({-1, 0, 1}, 5), poly({-1, 1}, 5)), poly({4, 1}, 5));
    const auto f = poly({2, 0, 3}, 5);
    EXPECT_EQ(poly_gcd(f, FpPoly(Prime(5))), f.monic());
    EXPECT_EQ(poly_gcd(FpPoly::x(Prime(5)), FpPoly::x(Prime(5))), FpPoly::x(Prime(5)));
    EXPECT_THROW(poly_gcd(FpPoly(Prime(5)), FpPoly(Prime(5))), std::invalid_argument);
}

TEST(PolyArithmetic, DivisionIdentity) {
    std::mt19937_64 rng(3);
    const Prime P(101);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::int64_t> a(1 + rng() % 10), b(1 + rng() % 6);
        for (auto& x : a) x = static_cast<std::int64_t>(rng() % 101);
        for (auto& x : b) x = static_cast<std::int64_t>(rng() % 101);
        b.back() = 1 + static_cast<std::int64_t>(rng() % 100);
        const auto A = poly(a, 101);
        const auto B = poly(b, 101);
        const auto [q, r] = A.divmod(B);
        EXPECT_EQ(q * B + r, A);
        EXPECT_LT(r.degree(), B.degree());
    }
}

TEST(FactorizationPattern, Examples) {
    const IntPoly f{1, -1, 0, 1};  // x^3 - x + 1
    EXPECT_EQ(factorization_pattern(f, Prime(59)).counts(), (std::vector<unsigned>{3, 0, 0}));
    EXPECT_EQ(factorization_pattern(f, Prime(2)).counts(), (std::vector<unsigned>{0, 0, 1}));
    try {
        factorization_pattern(f, Prime(23));
        FAIL() << "expected NotSquarefree";
    } catch (const NotSquarefree& e) {
        EXPECT_EQ(e.prime(), 23U);
    }
    EXPECT_THROW(factorization_pattern(IntPoly{1, 0, 7}, Prime(7)), BadReduction);
}

TEST(FactorizationPattern, MatchesTrialDivisionUpToDegreeFour) {
    std::mt19937_64 rng(2024);
    for (const auto pr : oracle::primes_upto(50)) {
        const Prime P(static_cast<std::uint64_t>(pr));
        for (int trial = 0; trial < 60; ++trial) {
            const int d = 1 + static_cast<int>(rng() % 4);
            IntPoly f(static_cast<std::size_t>(d) + 1);
            for (auto& c : f) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(pr));
            if (f.back() == 0) f.back() = 1;
            const auto expect = oracle::trial_pattern(f, pr);
            if (expect.empty()) {
                EXPECT_THROW(factorization_pattern(f, P), NotSquarefree);
                continue;
            }
            const auto got = factorization_pattern(f, P);
            ASSERT_EQ(got.counts(), expect) << "p=" << pr << " trial " << trial;
            unsigned total = 0;
            for (unsigned i = 1; i <= got.degree(); ++i) total += i * got.count(i);
            EXPECT_EQ(total, static_cast<unsigned>(d));
        }
    }
}

TEST(FactorizationPattern, DistinctRootsAtRamifiedPrime) {
    // x^3 - x + 1 = (x - 3)(x - 10)^2 mod 23
    EXPECT_EQ(distinct_root_count(FpPoly::from_int({1, -1, 0, 1}, Prime(23))), 2U);
}

TEST(CycleType, Validation) {
    EXPECT_THROW(CycleType({1, 1, 1}), std::invalid_argument);  // 1 + 2 + 3 != 3
    EXPECT_EQ(all_cycle_types(4).size(), 5U);                    // partitions of 4
    EXPECT_EQ(all_cycle_types(6).size(), 11U);
}
