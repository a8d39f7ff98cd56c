#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "satotate/errors.hpp"
#include "satotate/moment_sequence.hpp"
#include "satotate/numeric.hpp"
#include "satotate/stgroups/engines.hpp"
#include "satotate/stgroups/quadrature.hpp"

namespace satotate::stgroups {

/// Thrown by catalog_group for a name outside the catalog.
class UnknownGroup : public std::out_of_range {
public:
    explicit UnknownGroup(const std::string& name) : std::out_of_range("unknown Sato-Tate group '" + name + "'") {}
};

/// Descriptive data attached to a catalog entry.
struct GroupMetadata {
    std::string identity_component;     ///< e.g. "U(1)_2"
    Rational zero_trace_density{0};     ///< proportion of components with identically zero trace
    std::string real_endomorphism_algebra;  ///< e.g. "M_2(C)"; empty where not tabulated
};

/// Expression tree describing a Sato-Tate group by how its trace is assembled:
/// atoms U(1), SU(2); diagonal m-fold copies; products; and a few named catalog groups
/// whose moments come from dedicated engines or constants.
class STGroupSpec {
public:
    enum class Kind { Atom, Scaled, Product, Catalog };

    static STGroupSpec atom(Atom a) { return STGroupSpec(Kind::Atom, a, 1, {}, to_string(a), 2); }

    static STGroupSpec scaled(Atom a, unsigned m) {
        if (m == 0) throw std::invalid_argument("scaled copy needs a positive multiplicity");
        if (m == 1) return atom(a);
        return STGroupSpec(Kind::Scaled, a, m, {}, to_string(a) + "_" + std::to_string(m), 2 * m);
    }

    static STGroupSpec product(std::vector<STGroupSpec> factors) {
        if (factors.size() < 2) throw std::invalid_argument("a product needs at least two factors");
        std::string name;
        unsigned dim = 0;
        for (const auto& f : factors) {
            if (!name.empty()) name += 'x';
            name += f.name();
            dim += f.ambient_dimension();
        }
        return STGroupSpec(Kind::Product, Atom::U1, 1, std::move(factors), std::move(name), dim);
    }

    /// Named group outside the atom/scale/product grammar: N(U(1)), USp(4), USp(6), U(3), D_6_1, D_6_2.
    static STGroupSpec catalog_entry(const std::string& name) {
        static const std::map<std::string, unsigned> dims{{"N(U(1))", 2}, {"USp(4)", 4}, {"USp(6)", 6},
                                                          {"U(3)", 6},    {"D_6_1", 4},  {"D_6_2", 4}};
        const auto it = dims.find(name);
        if (it == dims.end()) throw UnknownGroup(name);
        return STGroupSpec(Kind::Catalog, Atom::U1, 1, {}, name, it->second);
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] Atom atom_kind() const noexcept { return atom_; }
    [[nodiscard]] unsigned multiplicity() const noexcept { return multiplicity_; }
    [[nodiscard]] const std::vector<STGroupSpec>& factors() const noexcept { return factors_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    /// 2g for a subgroup of USp(2g).
    [[nodiscard]] unsigned ambient_dimension() const noexcept { return dim_; }
    [[nodiscard]] unsigned genus() const noexcept { return dim_ / 2; }

    [[nodiscard]] const GroupMetadata& metadata() const noexcept { return meta_; }
    STGroupSpec& with_metadata(GroupMetadata m) {
        meta_ = std::move(m);
        return *this;
    }

private:
    STGroupSpec(Kind k, Atom a, unsigned m, std::vector<STGroupSpec> factors, std::string name, unsigned dim)
        : kind_(k), atom_(a), multiplicity_(m), factors_(std::move(factors)), name_(std::move(name)), dim_(dim) {
        meta_.identity_component = name_;
    }

    Kind kind_;
    Atom atom_;
    unsigned multiplicity_;
    std::vector<STGroupSpec> factors_;
    std::string name_;
    unsigned dim_;
    GroupMetadata meta_;
};

/// Maximum moment order for entries stored as constants or obtained by rounding quadrature.
inline constexpr unsigned kCatalogConstantDepth = 10;

namespace detail {

inline MomentSequence constant_moments(const std::string& name, const std::vector<long long>& values, unsigned nmax) {
    if (nmax >= values.size()) {
        throw CapacityError(name + " moments are tabulated only through n = " + std::to_string(values.size() - 1));
    }
    std::vector<BigInt> m(values.begin(), values.begin() + nmax + 1);
    return MomentSequence::from_integers(m);
}

}  // namespace detail

/// Exact trace moments M_0..M_nmax of a group described by an expression tree.
inline MomentSequence trace_moments(const STGroupSpec& G, unsigned nmax) {
    switch (G.kind()) {
        case STGroupSpec::Kind::Atom:
            return atom_moments(G.atom_kind(), nmax);
        case STGroupSpec::Kind::Scaled:
            return scale_moments(atom_moments(G.atom_kind(), nmax), G.multiplicity());
        case STGroupSpec::Kind::Product: {
            MomentSequence m = trace_moments(G.factors().front(), nmax);
            for (std::size_t i = 1; i < G.factors().size(); ++i) m = convolve_moments(m, trace_moments(G.factors()[i], nmax));
            return m;
        }
        case STGroupSpec::Kind::Catalog:
            break;
    }
    const std::string& name = G.name();
    if (name == "N(U(1))") {
        // Identity component U(1) with weight 1/2; the other component has trace 0.
        std::vector<Rational> m{1};
        for (unsigned n = 1; n <= nmax; ++n) m.emplace_back(central_binomial(n), 2);
        return MomentSequence(std::move(m));
    }
    if (name == "USp(4)") {
        std::vector<BigInt> m;
        for (unsigned n = 0; n <= nmax; ++n) m.push_back(usp4_closed_form(n));
        return MomentSequence::from_integers(m);
    }
    if (name == "USp(6)") return walk_moments_usp(3, nmax);
    if (name == "U(3)") {
        if (nmax > kCatalogConstantDepth) throw CapacityError("U(3) moments are available only through n = 10");
        const auto q = quadrature_moments(WeylGroup::unitary(3), nmax);
        std::vector<BigInt> m;
        for (double v : q) m.emplace_back(static_cast<long long>(std::llround(v)));
        m[0] = 1;
        return MomentSequence::from_integers(m);
    }
    if (name == "D_6_1") return detail::constant_moments(name, {1, 0, 1, 0, 9, 0, 110, 0, 1505, 0, 21546}, nmax);
    if (name == "D_6_2") return detail::constant_moments(name, {1, 0, 2, 0, 18, 0, 200, 0, 2450, 0, 31752}, nmax);
    throw UnknownGroup(name);
}

/// A catalog entry together with its moments.
struct CatalogGroup {
    STGroupSpec spec;
    MomentSequence moments;
};

/// All supported catalog names, grouped by genus.
inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        // g = 1
        "U(1)", "SU(2)", "N(U(1))",
        // g = 2, connected
        "U(1)_2", "SU(2)_2", "U(1)xU(1)", "U(1)xSU(2)", "SU(2)xSU(2)", "USp(4)",
        // g = 2, disconnected examples
        "D_6_1", "D_6_2",
        // g = 3, connected
        "U(1)_3", "SU(2)_3", "U(1)xU(1)_2", "U(1)xSU(2)_2", "SU(2)xU(1)_2", "SU(2)xSU(2)_2", "U(1)xU(1)xU(1)",
        "U(1)xU(1)xSU(2)", "U(1)xSU(2)xSU(2)", "SU(2)xSU(2)xSU(2)", "U(1)xUSp(4)", "SU(2)xUSp(4)", "U(3)", "USp(6)"};
    return names;
}

/// Builds the named group's expression tree and metadata.
inline STGroupSpec catalog_spec(const std::string& name) {
    using A = Atom;
    const auto U1 = STGroupSpec::atom(A::U1);
    const auto SU2 = STGroupSpec::atom(A::SU2);
    auto prod = [](std::vector<STGroupSpec> f) { return STGroupSpec::product(std::move(f)); };
    auto meta = [](STGroupSpec s, std::string end_r, Rational zero = 0, std::string identity = {}) {
        GroupMetadata m;
        m.identity_component = identity.empty() ? s.name() : std::move(identity);
        m.zero_trace_density = zero;
        m.real_endomorphism_algebra = std::move(end_r);
        s.with_metadata(std::move(m));
        return s;
    };

    // g = 1
    if (name == "U(1)") return meta(U1, "C");
    if (name == "SU(2)") return meta(SU2, "R");
    if (name == "N(U(1))") return meta(STGroupSpec::catalog_entry(name), "C", Rational(1, 2), "U(1)");
    // g = 2
    if (name == "U(1)_2") return meta(STGroupSpec::scaled(A::U1, 2), "M_2(C)");
    if (name == "SU(2)_2") return meta(STGroupSpec::scaled(A::SU2, 2), "M_2(R)");
    if (name == "U(1)xU(1)") return meta(prod({U1, U1}), "CxC");
    if (name == "U(1)xSU(2)") return meta(prod({U1, SU2}), "CxR");
    if (name == "SU(2)xSU(2)") return meta(prod({SU2, SU2}), "RxR");
    if (name == "USp(4)") return meta(STGroupSpec::catalog_entry(name), "R");
    if (name == "D_6_1") return meta(STGroupSpec::catalog_entry(name), "M_2(C)", Rational(3, 4), "U(1)_2");
    if (name == "D_6_2") return meta(STGroupSpec::catalog_entry(name), "M_2(C)", Rational(7, 12), "U(1)_2");
    // g = 3
    if (name == "U(1)_3") return meta(STGroupSpec::scaled(A::U1, 3), "M_3(C)");
    if (name == "SU(2)_3") return meta(STGroupSpec::scaled(A::SU2, 3), "M_3(R)");
    if (name == "U(1)xU(1)_2") return meta(prod({U1, STGroupSpec::scaled(A::U1, 2)}), "CxM_2(C)");
    if (name == "U(1)xSU(2)_2") return meta(prod({U1, STGroupSpec::scaled(A::SU2, 2)}), "CxM_2(R)");
    if (name == "SU(2)xU(1)_2") return meta(prod({SU2, STGroupSpec::scaled(A::U1, 2)}), "RxM_2(C)");
    if (name == "SU(2)xSU(2)_2") return meta(prod({SU2, STGroupSpec::scaled(A::SU2, 2)}), "RxM_2(R)");
    if (name == "U(1)xU(1)xU(1)") return meta(prod({U1, U1, U1}), "CxCxC");
    if (name == "U(1)xU(1)xSU(2)") return meta(prod({U1, U1, SU2}), "CxCxR");
    if (name == "U(1)xSU(2)xSU(2)") return meta(prod({U1, SU2, SU2}), "CxRxR");
    if (name == "SU(2)xSU(2)xSU(2)") return meta(prod({SU2, SU2, SU2}), "RxRxR");
    if (name == "U(1)xUSp(4)") return meta(prod({U1, STGroupSpec::catalog_entry("USp(4)")}), "CxR");
    if (name == "SU(2)xUSp(4)") return meta(prod({SU2, STGroupSpec::catalog_entry("USp(4)")}), "RxR");
    if (name == "U(3)") return meta(STGroupSpec::catalog_entry(name), "C");
    if (name == "USp(6)") return meta(STGroupSpec::catalog_entry(name), "R");
    throw UnknownGroup(name);
}

/// Named catalog group with its exact moments through nmax (default 10).
inline CatalogGroup catalog_group(const std::string& name, unsigned nmax = kCatalogConstantDepth) {
    auto spec = catalog_spec(name);
    auto moments = trace_moments(spec, nmax);
    return {std::move(spec), std::move(moments)};
}

/// Weyl-integration moments for a catalog group that has a Weyl formula here.
inline std::vector<double> quadrature_moments(const STGroupSpec& G, unsigned nmax, unsigned grid = kMinQuadratureGrid) {
    if (G.kind() == STGroupSpec::Kind::Atom && G.atom_kind() == Atom::SU2) {
        return quadrature_moments(WeylGroup::usp(1), nmax, grid);
    }
    if (G.kind() == STGroupSpec::Kind::Catalog) {
        if (G.name() == "USp(4)") return quadrature_moments(WeylGroup::usp(2), nmax, grid);
        if (G.name() == "USp(6)") return quadrature_moments(WeylGroup::usp(3), nmax, grid);
        if (G.name() == "U(3)") return quadrature_moments(WeylGroup::unitary(3), nmax, grid);
    }
    throw std::invalid_argument("quadrature_moments: unsupported group " + G.name());
}

}  // namespace satotate::stgroups
