// satotate: surveys of Frobenius traces and the theoretical moment catalog.
//
// Exit status: 0 success (warnings are listed in the output), 2 bad arguments,
// 3 a feasibility cap was exceeded, 1 anything else.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "satotate/satotate.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace satotate;

struct Output {
    std::string format = "csv";
    std::string precision = "fixed";

    [[nodiscard]] bool json_mode() const { return format == "json"; }

    [[nodiscard]] std::string str(double x) const {
        char buf[64];
        std::snprintf(buf, sizeof buf, precision == "full" ? "%.17g" : "%.6f", x);
        std::string s = buf;
        if (s == "-0.000000" || s == "-0") s.erase(0, 1);
        return s;
    }
    // Numeric value for JSON carrying exactly what the CSV shows.
    [[nodiscard]] double num(double x) const { return std::stod(str(x)); }
};

/// CSV section: a header line, rows, and a blank separator before the next section.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}
    void section(const std::string& header) {
        if (started_) os_ << '\n';
        started_ = true;
        os_ << header << '\n';
    }
    template <class... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        ((os_ << (first ? "" : ",") << cells, first = false), ...);
        os_ << '\n';
    }
    void warnings(const std::vector<SkippedPrime>& skipped) {
        for (const auto& s : skipped) os_ << "# warning: p=" << s.p << ": " << s.reason << '\n';
    }

private:
    std::ostream& os_;
    bool started_ = false;
};

json warnings_json(const std::vector<SkippedPrime>& skipped) {
    json w = json::array();
    for (const auto& s : skipped) w.push_back({{"p", s.p}, {"reason", s.reason}});
    return w;
}

// Shared statistics block: summary, moments, histogram.
void emit_trace_statistics(const stats::TraceAccumulator& acc, unsigned nmax, std::optional<std::size_t> bins,
                           const Output& out, CsvWriter* csv, json* js, const std::string& count_label) {
    const auto m = acc.moments(nmax);
    const auto hist = acc.histogram(bins);
    if (csv) {
        csv->section(count_label + ",zero_count,zero_density");
        csv->row(acc.count(), acc.zero_count(), out.str(acc.zero_density()));
        csv->section("n,M_n");
        for (unsigned n = 0; n <= nmax; ++n) csv->row(n, out.str(m[n]));
        csv->section("lo,hi,count,frequency");
        for (std::size_t i = 0; i < hist.bins(); ++i) {
            csv->row(out.str(hist.lo(i)), out.str(hist.hi(i)), hist.counts()[i], out.str(hist.frequency(i)));
        }
    } else {
        (*js)[count_label] = acc.count();
        (*js)["zero_count"] = acc.zero_count();
        (*js)["zero_density"] = out.num(acc.zero_density());
        json moments = json::array();
        for (unsigned n = 0; n <= nmax; ++n) moments.push_back(out.num(m[n]));
        (*js)["moments"] = moments;
        json h = json::array();
        for (std::size_t i = 0; i < hist.bins(); ++i) {
            h.push_back({{"lo", out.num(hist.lo(i))},
                         {"hi", out.num(hist.hi(i))},
                         {"count", hist.counts()[i]},
                         {"frequency", out.num(hist.frequency(i))}});
        }
        (*js)["histogram"] = h;
    }
}

void emit_curve_survey(const curves::CurveSurvey& s, bool per_prime, bool with_e2, unsigned nmax,
                       std::optional<std::size_t> bins, const Output& out, json js) {
    if (out.json_mode()) {
        emit_trace_statistics(s.accumulator(), nmax, bins, out, nullptr, &js, "samples");
        if (per_prime) {
            json rows = json::array();
            for (const auto& r : s.records()) {
                json row{{"p", r.p}, {"t", r.t}};
                if (with_e2) row["e2"] = r.e2.value_or(0);
                row["x"] = out.num(r.x);
                row["multiplicity"] = r.multiplicity;
                rows.push_back(row);
            }
            js["primes"] = rows;
        }
        js["warnings"] = warnings_json(s.skipped());
        std::cout << js.dump(2) << '\n';
        return;
    }
    CsvWriter csv(std::cout);
    emit_trace_statistics(s.accumulator(), nmax, bins, out, &csv, nullptr, "samples");
    if (per_prime) {
        csv.section(with_e2 ? "p,t,e2,x,multiplicity" : "p,t,x,multiplicity");
        for (const auto& r : s.records()) {
            if (with_e2) {
                csv.row(r.p, r.t, r.e2.value_or(0), out.str(r.x), r.multiplicity);
            } else {
                csv.row(r.p, r.t, out.str(r.x), r.multiplicity);
            }
        }
    }
    csv.warnings(s.skipped());
}

curves::EllipticCurve parse_curve(const std::vector<std::int64_t>& ab) {
    if (ab.size() != 2) throw std::invalid_argument("--curve expects two integers A,B");
    return {ab[0], ab[1]};
}

curves::BaseField parse_base(const std::optional<std::int64_t>& disc) {
    if (!disc) return std::nullopt;
    return curves::QuadraticField(*disc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sato-Tate statistics: point-count surveys, exact trace moments, classification"};
    app.require_subcommand(1);

    Output out;
    unsigned workers = default_worker_count();
    unsigned nmax = 10;
    std::optional<std::size_t> bins;
    std::uint64_t bound = 0;
    std::vector<std::int64_t> poly;
    std::vector<std::int64_t> curve_ab;
    std::optional<std::int64_t> disc;
    bool per_prime = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--precision", out.precision, "'fixed' (6 decimals) or 'full'")
            ->check(CLI::IsMember({"fixed", "full"}));
    };
    auto survey_opts = [&](CLI::App* sub) {
        sub->add_option("--bound", bound, "Prime bound B")->required();
        sub->add_option("--workers", workers, "Worker threads (default: $SATOTATE_WORKERS or 1)")
            ->check(CLI::Range(1U, 256U));
        sub->add_option("--nmax", nmax, "Highest moment order")->check(CLI::Range(0U, 10U));
        sub->add_option("--bins", bins, "Histogram bins (default round(sqrt(N)))")->check(CLI::PositiveNumber);
        sub->add_flag("--per-prime", per_prime, "Also list each prime");
    };

    // artin
    auto* artin_cmd = app.add_subcommand("artin", "Root counts N_f(p) of an integer polynomial");
    std::string convention = "clean";
    unsigned artin_nmax = 4;
    artin_cmd->add_option("--poly", poly, "Coefficients, lowest degree first")->required()->delimiter(',');
    artin_cmd->add_option("--bound", bound, "Prime bound B")->required();
    artin_cmd->add_option("--convention", convention, "paper-table | clean")
        ->check(CLI::IsMember({"paper-table", "clean"}));
    artin_cmd->add_option("--nmax", artin_nmax, "Highest moment order")->check(CLI::Range(0U, 10U));
    artin_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
    common(artin_cmd);

    // ec
    auto* ec_cmd = app.add_subcommand("ec", "Survey t_p / sqrt(p) for y^2 = x^3 + A x + B");
    ec_cmd->add_option("--curve", curve_ab, "A,B")->required()->delimiter(',');
    ec_cmd->add_option("--disc", disc, "Imaginary quadratic base field discriminant (e.g. -3)");
    survey_opts(ec_cmd);
    common(ec_cmd);

    // genus2
    auto* g2_cmd = app.add_subcommand("genus2", "Survey e_1 / sqrt(p) for y^2 = f(x), deg f = 5 or 6");
    bool with_e2 = false;
    g2_cmd->add_option("--poly", poly, "Coefficients of f, lowest degree first")->required()->delimiter(',');
    g2_cmd->add_flag("--lpoly", with_e2, "Also count over F_{p^2} and report e_2 (slow)");
    survey_opts(g2_cmd);
    common(g2_cmd);

    // powers
    auto* pow_cmd = app.add_subcommand("powers", "Traces of Frobenius powers a_r / q^{r/2} for given t, q");
    std::int64_t t = 0;
    std::uint64_t q = 0;
    std::size_t rmax = 0;
    pow_cmd->add_option("--t", t, "Trace of Frobenius")->required();
    pow_cmd->add_option("--q", q, "Field size")->required()->check(CLI::PositiveNumber);
    pow_cmd->add_option("--rmax", rmax, "Number of powers")->required()->check(CLI::PositiveNumber);
    pow_cmd->add_option("--nmax", nmax, "Highest moment order")->check(CLI::Range(0U, 10U));
    pow_cmd->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);
    pow_cmd->add_flag("--per-prime,--terms", per_prime, "Also list each term");
    common(pow_cmd);

    // group
    auto* grp_cmd = app.add_subcommand("group", "Exact trace moments of a catalog Sato-Tate group");
    std::string name;
    grp_cmd->add_option("--name", name, "Catalog name, e.g. USp(4), N(U(1)), D_6_1")->required();
    grp_cmd->add_option("--nmax", nmax, "Highest moment order")->check(CLI::Range(0U, 10U));
    grp_cmd->add_option("--bins", bins, "Also print the trace measure on this many bins (genus 1)")
        ->check(CLI::PositiveNumber);
    common(grp_cmd);

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "Rank catalog groups against a survey or synthetic sample");
    std::vector<std::string> candidates;
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    cls_cmd->add_option("--curve", curve_ab, "Elliptic curve A,B")->delimiter(',');
    cls_cmd->add_option("--poly", poly, "Genus-2 f, lowest degree first")->delimiter(',');
    cls_cmd->add_option("--name", name, "Classify synthetic Haar samples from this group");
    cls_cmd->add_option("--disc", disc, "Imaginary quadratic base field discriminant");
    cls_cmd->add_option("--bound", bound, "Prime bound for surveys");
    cls_cmd->add_option("--samples", samples, "Synthetic sample count");
    cls_cmd->add_option("--seed", seed, "Synthetic sample seed");
    cls_cmd->add_option("--candidates", candidates, "Comma-separated catalog names (default: all of the genus)")
        ->delimiter(',');
    cls_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
    common(cls_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (artin_cmd->parsed()) {
            const auto s = artin::artin_survey(poly, bound, artin::parse_convention(convention), workers);
            const auto c = s.ratios();
            const auto m = s.accumulator().moments(artin_nmax);
            if (out.json_mode()) {
                json js{{"command", "artin"}, {"bound", bound}, {"convention", convention}, {"primes", s.total()}};
                json counts = json::array();
                json ratios = json::array();
                for (std::size_t i = 0; i < c.size(); ++i) {
                    counts.push_back(s.counts()[i]);
                    ratios.push_back(out.num(to_double(c[i])));
                }
                js["counts"] = counts;
                js["c"] = ratios;
                json moments = json::array();
                for (double v : m) moments.push_back(out.num(v));
                js["moments"] = moments;
                js["warnings"] = warnings_json(s.skipped());
                std::cout << js.dump(2) << '\n';
            } else {
                CsvWriter csv(std::cout);
                csv.section("i,count,c_i");
                for (std::size_t i = 0; i < c.size(); ++i) csv.row(i, s.counts()[i], out.str(to_double(c[i])));
                csv.section("n,M_n");
                for (std::size_t n = 0; n < m.size(); ++n) csv.row(n, out.str(m[n]));
                csv.warnings(s.skipped());
            }
        } else if (ec_cmd->parsed()) {
            const auto E = parse_curve(curve_ab);
            curves::SurveyOptions opt{workers, per_prime, false};
            const auto s = curves::curve_survey(E, bound, parse_base(disc), opt);
            json js{{"command", "ec"}, {"curve", curve_ab}, {"bound", bound}};
            if (disc) js["disc"] = *disc;
            emit_curve_survey(s, per_prime, false, nmax, bins, out, js);
        } else if (g2_cmd->parsed()) {
            const curves::HyperellipticCurve C(poly);
            curves::SurveyOptions opt{workers, per_prime, with_e2};
            const auto s = curves::curve_survey(C, bound, std::nullopt, opt);
            emit_curve_survey(s, per_prime, with_e2, nmax, bins, out,
                              json{{"command", "genus2"}, {"poly", poly}, {"bound", bound}});
        } else if (pow_cmd->parsed()) {
            const auto x = curves::normalized_power_traces(t, q, rmax);
            std::optional<std::vector<curves::PowerTrace>> exact;
            if (per_prime && rmax <= 10'000) exact = curves::frobenius_power_traces(t, q, rmax);
            stats::TraceAccumulator acc(1);
            for (std::size_t r = 1; r <= rmax; ++r) acc.add_normalized(x[r], curves::power_trace_is_zero(t, q, r));
            json js{{"command", "powers"}, {"t", t}, {"q", q}, {"rmax", rmax}};
            if (out.json_mode()) {
                emit_trace_statistics(acc, nmax, bins, out, nullptr, &js, "terms");
                if (per_prime) {
                    json rows = json::array();
                    for (std::size_t r = 1; r <= rmax; ++r) {
                        json row{{"r", r}};
                        if (exact) row["a"] = (*exact)[r].a.str();
                        row["x"] = out.num(x[r]);
                        rows.push_back(row);
                    }
                    js["terms_list"] = rows;
                }
                std::cout << js.dump(2) << '\n';
            } else {
                CsvWriter csv(std::cout);
                emit_trace_statistics(acc, nmax, bins, out, &csv, nullptr, "terms");
                if (per_prime) {
                    csv.section(exact ? "r,a_r,x_r" : "r,x_r");
                    for (std::size_t r = 1; r <= rmax; ++r) {
                        if (exact) {
                            csv.row(r, (*exact)[r].a.str(), out.str(x[r]));
                        } else {
                            csv.row(r, out.str(x[r]));
                        }
                    }
                }
            }
        } else if (grp_cmd->parsed()) {
            const auto G = stgroups::catalog_group(name, nmax);
            std::optional<std::vector<double>> edges;
            std::vector<double> mass;
            if (bins) {
                if (G.spec.genus() != 1) throw std::invalid_argument("--bins is available only for genus-1 groups");
                edges = stats::Histogram::uniform(-2.0, 2.0, *bins).edges();
                mass = stgroups::theoretical_trace_histogram(G.spec, *edges);
            }
            if (out.json_mode()) {
                const auto& meta = G.spec.metadata();
                json moments = json::array();
                for (const auto& v : G.moments.values()) {
                    if (is_integer(v)) {
                        moments.push_back(json::parse(boost::multiprecision::numerator(v).str()));
                    } else {
                        moments.push_back(v.str());
                    }
                }
                json js{{"name", G.spec.name()},
                        {"genus", G.spec.genus()},
                        {"identity_component", meta.identity_component},
                        {"real_endomorphism_algebra", meta.real_endomorphism_algebra},
                        {"zero_trace_density", meta.zero_trace_density.str()},
                        {"moments", moments}};
                if (edges) {
                    json h = json::array();
                    for (std::size_t i = 0; i < mass.size(); ++i) {
                        h.push_back({{"lo", out.num((*edges)[i])}, {"hi", out.num((*edges)[i + 1])}, {"mass", out.num(mass[i])}});
                    }
                    js["histogram"] = h;
                }
                std::cout << js.dump(2) << '\n';
            } else {
                std::cout << to_string(G.moments) << '\n';
                if (edges) {
                    std::cout << "\nlo,hi,mass\n";
                    for (std::size_t i = 0; i < mass.size(); ++i) {
                        std::cout << out.str((*edges)[i]) << ',' << out.str((*edges)[i + 1]) << ',' << out.str(mass[i]) << '\n';
                    }
                }
            }
        } else if (cls_cmd->parsed()) {
            const int sources = (curve_ab.empty() ? 0 : 1) + (poly.empty() ? 0 : 1) + (name.empty() ? 0 : 1);
            if (sources != 1) throw std::invalid_argument("classify needs exactly one of --curve, --poly, --name");
            if ((!curve_ab.empty() || !poly.empty()) && bound == 0) throw std::invalid_argument("surveys need --bound");
            std::optional<stats::TraceAccumulator> acc;
            if (!curve_ab.empty()) {
                acc = curves::curve_survey(parse_curve(curve_ab), bound, parse_base(disc), {workers, false, false}).accumulator();
            } else if (!poly.empty()) {
                acc = curves::curve_survey(curves::HyperellipticCurve(poly), bound, std::nullopt, {workers, false, false})
                          .accumulator();
            } else {
                const auto spec = stgroups::catalog_spec(name);
                acc.emplace(spec.genus(), false);
                stgroups::EigenangleSampler sampler(spec, seed);
                for (std::size_t i = 0; i < samples; ++i) {
                    const auto s = sampler.next();
                    acc->add_normalized(s.trace(), s.trace_identically_zero);
                }
            }
            if (candidates.empty()) candidates = stats::candidates_for_genus(acc->genus());
            const auto report = stats::classify(*acc, candidates);
            if (out.json_mode()) {
                json arr = json::array();
                for (const auto& e : report.ranking) arr.push_back({{"name", e.name}, {"score", out.num(e.score)}});
                std::cout << arr.dump(2) << '\n';
            } else {
                CsvWriter csv(std::cout);
                csv.section("name,score");
                for (const auto& e : report.ranking) csv.row(e.name, out.str(e.score));
            }
        }
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
