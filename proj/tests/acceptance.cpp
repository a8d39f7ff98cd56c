// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reference_values.hpp"
#include "satotate/satotate.hpp"

using namespace satotate;

namespace {

// Tolerances and bounds, one per criterion.
constexpr double kArtinMaxSeconds = 60.0;                 // 1
constexpr double kNonCmMomentTol = 0.1;                   // 3
constexpr double kNonCmZeroDensityMax = 0.02;             // 3
constexpr double kNonCmMaxSeconds = 600.0;                // 3
constexpr double kCmZeroDensityTol = 0.02;                // 4
constexpr double kCmM2Tol = 0.05;                         // 4
constexpr double kCmFieldM2Tol = 0.1;                     // 5
constexpr double kCmFieldM4Tol = 0.3;                     // 5
constexpr std::uint64_t kGenus2Bound = 4096;              // 6
constexpr double kGenus2ZeroTol = 0.06;                   // 6
constexpr double kGenus2M2Tol = 0.2;                      // 6
constexpr double kGenus2MaxSeconds = 1200.0;              // 6
constexpr double kQuadratureTol = 1e-6;                   // 8
constexpr unsigned kWalkMaxGenus = 5;                     // 9
constexpr double kRootModulusTol = 1e-9;                  // 11
constexpr std::int64_t kWeilPrimeBound = 500;             // 11
constexpr std::size_t kPowerLength = 100'000;             // 12
constexpr double kPowerM2Tol = 0.05;                      // 12
constexpr double kPowerM4Tol = 0.2;                       // 12
constexpr std::uint64_t kSurveyBound = 100'000;           // 3, 4, 5, 13
constexpr std::size_t kSyntheticSamples = 100'000;        // 13

const ff::IntPoly kC1{28, -60, 60, -20, 15, 3, 1};
const ff::IntPoly kC2{-1, 6, -15, 20, -15, 6, 1};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "    " << what << '\n';
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

Outcome artin_table() {
    Outcome o;
    for (const auto& row : reference::artin_rows()) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto s = artin::artin_survey({1, -1, 0, 1}, row.bound, artin::SurveyConvention::PaperTable, 1);
        const double dt = seconds_since(t0);
        const auto c = s.ratios();
        for (std::size_t i = 0; i < 4; ++i) {
            const std::string got = fmt(to_double(c[i]));
            o.check(got == fmt(row.c[i]), "B=" + std::to_string(row.bound) + " c_" + std::to_string(i) + " = " + got +
                                              ", expected " + fmt(row.c[i]));
        }
        if (row.bound == 1'000'000) o.check(dt <= kArtinMaxSeconds, "B=10^6 took " + fmt(dt) + " s");
    }
    return o;
}

Outcome s3_suite() {
    Outcome o;
    using artin::cycle;
    const struct {
        const char* name;
        artin::PermGroup group;
        std::vector<long long> moments;
    } rows[] = {
        {"trivial", artin::PermGroup(3, {}), {1, 3, 9, 27, 81}},
        {"C_2", artin::PermGroup(3, {cycle(3, {1, 2})}), {1, 2, 5, 14, 41}},
        {"C_3", artin::PermGroup(3, {cycle(3, {1, 2, 3})}), {1, 1, 3, 9, 27}},
        {"S_3", artin::PermGroup(3, {cycle(3, {1, 2}), cycle(3, {1, 2, 3})}), {1, 1, 2, 5, 14}},
    };
    for (const auto& r : rows) {
        const auto d = artin::perm_group_distribution(r.group, static_cast<unsigned>(r.moments.size() - 1));
        o.check(d.moments.integers() == std::vector<BigInt>(r.moments.begin(), r.moments.end()),
                std::string(r.name) + " moments " + to_string(d.moments));
    }
    return o;
}

Outcome non_cm() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = curves::curve_survey(curves::EllipticCurve(1, 1), kSurveyBound);
    const double dt = seconds_since(t0);
    const auto m = s.accumulator().moments(8);
    const double expected[] = {1, 0, 1, 0, 2, 0, 5, 0, 14};
    for (unsigned n = 2; n <= 8; n += 2) {
        o.check(std::abs(m[n] - expected[n]) <= kNonCmMomentTol, "M_" + std::to_string(n) + " = " + fmt(m[n]));
    }
    o.check(s.accumulator().zero_density() <= kNonCmZeroDensityMax, "zero density " + fmt(s.accumulator().zero_density()));
    o.check(dt <= kNonCmMaxSeconds, "took " + fmt(dt) + " s");
    return o;
}

Outcome cm_over_q() {
    Outcome o;
    const auto s = curves::curve_survey(curves::EllipticCurve(0, 1), kSurveyBound);
    const double z = s.accumulator().zero_density();
    const double m2 = s.accumulator().moments(2)[2];
    o.check(std::abs(z - 0.5) <= kCmZeroDensityTol, "zero density " + fmt(z));
    o.check(std::abs(m2 - 1.0) <= kCmM2Tol, "M_2 = " + fmt(m2));
    return o;
}

Outcome cm_over_field() {
    Outcome o;
    const auto s = curves::curve_survey(curves::EllipticCurve(0, 1), kSurveyBound, curves::QuadraticField(-3));
    const auto m = s.accumulator().moments(4);
    o.check(std::abs(m[2] - 2.0) <= kCmFieldM2Tol, "M_2 = " + fmt(m[2]));
    o.check(std::abs(m[4] - 6.0) <= kCmFieldM4Tol, "M_4 = " + fmt(m[4]));
    return o;
}

Outcome genus2_catalog() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const struct {
        const char* name;
        const ff::IntPoly& f;
        double zero;
        double m2;
    } rows[] = {{"C_1", kC1, 3.0 / 4.0, 1.0}, {"C_2", kC2, 7.0 / 12.0, 2.0}};
    for (const auto& r : rows) {
        const auto s = curves::curve_survey(curves::HyperellipticCurve(r.f), kGenus2Bound);
        const double z = s.accumulator().zero_density();
        const double m2 = s.accumulator().moments(2)[2];
        o.check(std::abs(z - r.zero) <= kGenus2ZeroTol, std::string(r.name) + " zero density " + fmt(z));
        o.check(std::abs(m2 - r.m2) <= kGenus2M2Tol, std::string(r.name) + " M_2 = " + fmt(m2));
    }
    const double dt = seconds_since(t0);
    o.check(dt <= kGenus2MaxSeconds, "took " + fmt(dt) + " s");
    return o;
}

Outcome exact_catalog() {
    Outcome o;
    for (const auto& row : reference::moment_lists()) {
        const auto G = stgroups::catalog_group(row.group);
        o.check(G.moments.integers() == std::vector<BigInt>(row.moments.begin(), row.moments.end()),
                row.group + " gave " + to_string(G.moments));
    }
    const auto m = stgroups::catalog_group("U(1)xSU(2)xSU(2)").moments;
    o.check(m[8] == 9898 && m[10] == 195216, "U(1)xSU(2)xSU(2) M_8, M_10");
    return o;
}

Outcome quadrature_oracle() {
    Outcome o;
    for (unsigned g = 1; g <= 3; ++g) {
        const auto exact = stgroups::walk_moments_usp(g, 10);
        const auto q = stgroups::quadrature_moments(stgroups::WeylGroup::usp(g), 10);
        for (unsigned n = 0; n <= 10; ++n) {
            o.check(std::abs(q[n] - to_double(exact[n])) <= kQuadratureTol,
                    "USp(" + std::to_string(2 * g) + ") M_" + std::to_string(n) + " = " + fmt(q[n]));
        }
    }
    const auto q = stgroups::quadrature_moments(stgroups::WeylGroup::unitary(3), 10);
    const std::vector<long long> u3{1, 0, 2, 0, 12, 0, 120, 0, 1610, 0, 25956};
    for (unsigned n = 0; n <= 10; ++n) {
        o.check(std::llround(q[n]) == u3[n], "U(3) M_" + std::to_string(n) + " = " + fmt(q[n]));
    }
    return o;
}

Outcome walk_stabilization() {
    Outcome o;
    for (unsigned g = 1; g < kWalkMaxGenus; ++g) {
        const auto a = stgroups::walk_moments_usp(g, 2 * g + 2);
        for (unsigned gp = g + 1; gp <= kWalkMaxGenus; ++gp) {
            const auto b = stgroups::walk_moments_usp(gp, 2 * g + 2);
            for (unsigned n = 0; n <= 2 * g; ++n) {
                o.check(a[n] == b[n], "g=" + std::to_string(g) + " g'=" + std::to_string(gp) + " n=" + std::to_string(n));
            }
            o.check(a[2 * g + 2] != b[2 * g + 2], "g=" + std::to_string(g) + " g'=" + std::to_string(gp) + " agree at 2g+2");
        }
    }
    const auto m = stgroups::walk_moments_usp(6, 12);
    BigInt dfact = 1;
    for (unsigned n = 2; n <= 12; n += 2) {
        dfact *= n - 1;
        o.check(m[n] == dfact, "g=6 M_" + std::to_string(n) + " = " + m[n].str());
    }
    return o;
}

Outcome zeta_identity() {
    Outcome o;
    std::size_t checked = 0;
    for (unsigned d = 1; d <= 6; ++d) {
        for (const auto& ct : ff::all_cycle_types(d)) {
            const auto N = zeta_expand(artin::weight0_lpoly(ct), 12);
            for (unsigned r = 1; r <= 12; ++r, ++checked) {
                o.check(N[r - 1] == BigInt(artin::weight0_counts(ct, r)), "degree " + std::to_string(d) + " r=" + std::to_string(r));
            }
        }
    }
    o.check(checked > 0, "no cycle types enumerated");
    return o;
}

Outcome weil_bounds() {
    Outcome o;
    std::vector<ff::IntPoly> curves_under_test{kC1, kC2};
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<std::int64_t> coef(-9, 9);
    while (curves_under_test.size() < 5) {
        ff::IntPoly f(curves_under_test.size() % 2 == 0 ? 7 : 6);
        for (auto& c : f) c = coef(rng);
        if (f.back() == 0) continue;
        try {
            curves::HyperellipticCurve C(f);
            curves_under_test.push_back(f);
        } catch (const std::invalid_argument&) {
        }
    }
    for (const auto& f : curves_under_test) {
        const curves::HyperellipticCurve C(f);
        for (const auto p : oracle::primes_upto(kWeilPrimeBound)) {
            const ff::Prime P(static_cast<std::uint64_t>(p));
            if (p <= 3 || !C.has_good_reduction(P)) continue;
            const auto L = curves::hyperelliptic_lpoly(C, P);
            o.check(L.satisfies_functional_equation(), "functional equation at p=" + std::to_string(p));
            std::vector<long double> c;
            for (const auto& r : oracle::squarefree_part(L.coefficients())) c.push_back(static_cast<long double>(to_double(r)));
            for (const auto& z : oracle::roots(c)) {
                const double err = std::abs(static_cast<double>(std::abs(z)) - 1.0 / std::sqrt(static_cast<double>(p)));
                o.check(err <= kRootModulusTol, "root modulus off by " + std::to_string(err) + " at p=" + std::to_string(p));
            }
        }
    }
    return o;
}

Outcome frobenius_powers() {
    Outcome o;
    const auto x = curves::normalized_power_traces(-3, 5, kPowerLength);
    double m2 = 0;
    double m4 = 0;
    for (std::size_t r = 1; r <= kPowerLength; ++r) {
        m2 += x[r] * x[r];
        m4 += x[r] * x[r] * x[r] * x[r];
    }
    m2 /= kPowerLength;
    m4 /= kPowerLength;
    o.check(std::abs(m2 - 2.0) <= kPowerM2Tol, "M_2 = " + fmt(m2));
    o.check(std::abs(m4 - 6.0) <= kPowerM4Tol, "M_4 = " + fmt(m4));
    return o;
}

Outcome classification() {
    Outcome o;
    const auto g1 = stats::candidates_for_genus(1);
    const struct {
        const char* label;
        curves::EllipticCurve E;
        curves::BaseField base;
        const char* expected;
    } surveys[] = {
        {"y^2=x^3+x+1", curves::EllipticCurve(1, 1), std::nullopt, "SU(2)"},
        {"y^2=x^3+1", curves::EllipticCurve(0, 1), std::nullopt, "N(U(1))"},
        {"y^2=x^3+1 over Q(sqrt(-3))", curves::EllipticCurve(0, 1), curves::QuadraticField(-3), "U(1)"},
    };
    for (const auto& s : surveys) {
        const auto acc = curves::curve_survey(s.E, kSurveyBound, s.base).accumulator();
        const auto best = stats::classify(acc, g1).best().name;
        o.check(best == s.expected, std::string(s.label) + " classified as " + best);
    }
    for (const char* name : {"U(1)", "N(U(1))", "SU(2)", "USp(4)"}) {
        const auto spec = stgroups::catalog_spec(name);
        stats::TraceAccumulator acc(spec.genus());
        for (const auto& e : stgroups::sample_eigenangles(spec, kSyntheticSamples, 2026)) {
            acc.add_normalized(e.trace(), e.trace_identically_zero);
        }
        const auto best = stats::classify(acc, stats::candidates_for_genus(spec.genus())).best().name;
        o.check(best == name, std::string("synthetic ") + name + " classified as " + best);
    }
    return o;
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Artin c_i table for x^3-x+1 at B = 10^3..10^6", artin_table},
        {"Exact trace distributions of S_3 subgroups", s3_suite},
        {"Non-CM elliptic curve moments and zero density", non_cm},
        {"CM elliptic curve over Q", cm_over_q},
        {"CM elliptic curve over its CM field", cm_over_field},
        {"Genus-2 curves with D_6 groups", genus2_catalog},
        {"Exact catalog moment sequences", exact_catalog},
        {"Weyl quadrature agrees with exact engines", quadrature_oracle},
        {"USp(2g) walk stabilization", walk_stabilization},
        {"Zeta identity for permutation L-polynomials", zeta_identity},
        {"Weil bounds for genus-2 L-polynomials", weil_bounds},
        {"Frobenius-power equidistribution", frobenius_powers},
        {"Classification of curves and synthetic data", classification},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "    exception: " << e.what() << '\n';
        }
        std::printf("[%s] %2zu. %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0));
        if (!o.pass) {
            ++failures;
            std::fputs(o.detail.str().c_str(), stdout);
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
