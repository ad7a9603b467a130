#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <multicurve/multicurve.hpp>

using namespace multicurve;

namespace {

Weight read_weight(const std::vector<std::int64_t>& n) {
    return Weight{Int(n[0]), Int(n[1]), Int(n[2])};
}

void print_warnings(const CurveAnalysis& ca) {
    for (const auto& w : ca.warnings)
        std::cerr << "warning: " << w << "\n";
}

std::string condition_line(const EmbeddedDivisorDatum& dd) {
    return "condition nu_m(f) >= floor(" + dd.w.str() + "*lambda - " + dd.k.str() + ")   (m = " +
           to_string(dd.m) + ", k_m = " + dd.k.str() + ")";
}

void print_analysis(const CurveAnalysis& ca) {
    std::cout << "curve n = " << to_string(ca.spec.n) << "\n";
    for (std::size_t i = 0; i < ca.generators.size(); ++i)
        std::cout << "f" << (i + 1) << " = " << to_string(ca.generators[i])
                  << "   ord = " << ca.generators[i].order << "\n";
    std::cout << "tau = " << to_string(ca.tau) << "\n";
    for (const auto& f : ca.newton.facets)
        std::cout << "facet: <" << to_string(f.a) << ", v> >= " << f.b << "\n";
    if (ca.corollary_path) {
        std::cout << "corollary path: the two lowest generator orders agree; G = {}\n";
    } else if (ca.sigma) {
        const SigmaReport& rep = *ca.sigma;
        std::cout << "sigma = <" << to_string(rep.sigma.ray[0]) << ", "
                  << to_string(rep.sigma.ray[1]) << ">\n";
        for (const auto& half : rep.halves) {
            std::cout << "sigma_{" << half.label << "} = <" << to_string(half.cone.ray[0]) << ", "
                      << to_string(half.cone.ray[1]) << ">\n";
            std::cout << "G_{" << half.label << "} = {";
            for (std::size_t i = 0; i < half.basis.size(); ++i)
                std::cout << (i ? ", " : "") << to_string(half.basis[i]);
            std::cout << "}\n";
            if (half.rho)
                std::cout << "rho_{" << half.label << "} = " << to_string(*half.rho) << "\n";
        }
        std::cout << "G = {";
        for (std::size_t i = 0; i < ca.G.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(ca.G[i].m);
        std::cout << "}\n";
        for (const auto& dd : ca.G)
            std::cout << condition_line(dd) << "\n";
    }
    std::cout << "lct = " << to_string(ca.lct)
              << (ca.lct_capped ? "   (capped: every component threshold exceeds 2)" : "") << "\n";
}

int run_analyze(const std::vector<std::int64_t>& n, bool json) {
    CurveAnalysis ca = analyze(validate_curve(read_weight(n)));
    print_warnings(ca);
    if (json)
        std::cout << to_json(ca).dump() << "\n";
    else
        print_analysis(ca);
    return 0;
}

int run_member(const std::vector<std::int64_t>& n, const std::string& lambda_text,
               const std::string& poly_text, bool plain_ord, bool json) {
    Rational lambda = parse_rational(lambda_text);
    SparsePolynomial f = parse_polynomial(poly_text);
    CurveAnalysis ca = analyze(validate_curve(read_weight(n)));
    print_warnings(ca);
    ValuationMode mode = plain_ord ? ValuationMode::plain_order : ValuationMode::quasi_monomial;
    MemberBreakdown verdict = member(ca, f, lambda, mode);
    if (json) {
        Json j;
        j["member"] = verdict.value();
        j["zero_input"] = verdict.zero_input;
        j["symbolic"] = verdict.symbolic;
        j["monomial"] = verdict.monomial;
        j["valuation"] = Json::array();
        for (bool ok : verdict.valuation)
            j["valuation"].push_back(ok);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "f = " << to_string(f) << "\n";
        std::cout << "lambda = " << to_string(lambda) << "\n";
        if (verdict.zero_input) {
            std::cout << "f = 0 lies in every ideal by convention\n";
        } else {
            std::cout << "symbolic part (floor(lambda - 1) = "
                      << floor(lambda - Rational(1)) << "): "
                      << (verdict.symbolic ? "pass" : "FAIL") << "\n";
            std::cout << "monomial part: " << (verdict.monomial ? "pass" : "FAIL") << "\n";
            for (std::size_t i = 0; i < ca.G.size(); ++i) {
                const auto& dd = ca.G[i];
                std::cout << "divisor m = " << to_string(dd.m) << ", "
                          << "required >= " << floor(lambda * Rational(dd.w) - Rational(dd.k))
                          << ": " << (verdict.valuation[i] ? "pass" : "FAIL") << "\n";
            }
        }
        std::cout << "member: " << (verdict.value() ? "true" : "false") << "\n";
    }
    return verdict.value() ? 0 : 1;
}

int run_jumps(const std::vector<std::int64_t>& n, const std::string& upto_text,
              std::optional<std::int64_t> degree_bound, bool show_candidates, bool plain_ord,
              bool json) {
    Rational T = parse_rational(upto_text);
    CurveAnalysis ca = analyze(validate_curve(read_weight(n)));
    print_warnings(ca);
    ValuationMode mode = plain_ord ? ValuationMode::plain_order : ValuationMode::quasi_monomial;
    std::optional<Int> bound;
    if (degree_bound)
        bound = Int(*degree_bound);
    JumpReport rep = jumping_numbers(ca, T, bound, mode);
    if (json) {
        std::cout << to_json(rep).dump() << "\n";
    } else {
        std::cout << "curve n = " << to_string(ca.spec.n) << "\n";
        if (show_candidates) {
            std::cout << "candidates:";
            for (const auto& c : rep.candidates)
                std::cout << " " << to_string(c);
            std::cout << "\n";
        }
        std::cout << "jumping numbers up to " << to_string(T) << ":\n";
        for (std::size_t i = 0; i < rep.verified.size(); ++i)
            std::cout << "  " << to_string(rep.verified[i]) << "   witness "
                      << to_string(rep.witnesses[i]) << "\n";
        if (rep.verified.empty())
            std::cout << "  (none)\n";
        std::cout << "note: verified only up to n-degree " << rep.degree_bound << "\n";
    }
    return 0;
}

int run_gens(const std::vector<std::int64_t>& n, const std::string& lambda_text,
             std::optional<std::int64_t> degree_bound, bool plain_ord, bool json) {
    Rational lambda = parse_rational(lambda_text);
    CurveAnalysis ca = analyze(validate_curve(read_weight(n)));
    print_warnings(ca);
    ValuationMode mode = plain_ord ? ValuationMode::plain_order : ValuationMode::quasi_monomial;
    std::optional<Int> bound;
    if (degree_bound)
        bound = Int(*degree_bound);
    GeneratorReport rep = generators_up_to(ca, lambda, bound, mode);
    if (!rep.stabilized)
        std::cerr << "warning: new generators appear near the degree bound; raise --degree-bound\n";
    if (json) {
        std::cout << to_json(rep).dump() << "\n";
    } else {
        std::cout << "curve n = " << to_string(ca.spec.n) << "\n";
        std::cout << "lambda = " << to_string(lambda) << "\n";
        std::cout << "generators (complete up to n-degree " << rep.degree_bound << "):\n";
        for (const auto& g : rep.generators) {
            Int d = dot(ca.spec.n, g.leading_exponent());
            std::cout << "  [deg " << d << "] " << to_string(g) << "\n";
        }
        if (rep.generators.empty())
            std::cout << "  (none: the ideal is zero in this window)\n";
    }
    return 0;
}

int run_lct(const std::vector<std::int64_t>& n, bool json) {
    CurveAnalysis ca = analyze(validate_curve(read_weight(n)));
    print_warnings(ca);
    if (json) {
        Json j;
        j["n"] = Json::array({n[0], n[1], n[2]});
        j["lct"] = to_string(ca.lct);
        j["capped"] = ca.lct_capped;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lct = " << to_string(ca.lct)
                  << (ca.lct_capped ? "   (capped: every component threshold exceeds 2)" : "")
                  << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplier ideals of monomial space curves"};
    app.require_subcommand(1);

    std::vector<std::int64_t> n;
    std::string lambda_text, poly_text, upto_text;
    std::int64_t degree_bound_raw = -1;
    bool json = false, plain_ord = false, show_candidates = false;

    auto add_curve = [&](CLI::App* sub) {
        sub->add_option("n", n, "curve exponents n1 n2 n3")->expected(3)->required();
        sub->add_flag("--json", json, "emit JSON on standard output");
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "run the full construction");
    add_curve(analyze_cmd);

    CLI::App* member_cmd = app.add_subcommand("member", "test membership in the multiplier ideal");
    add_curve(member_cmd);
    member_cmd->add_option("--lambda", lambda_text, "level, as p/q or an integer")->required();
    member_cmd->add_option("--poly", poly_text, "polynomial in x, y, z")->required();
    member_cmd->add_flag("--plain-ord", plain_ord, "use the plain monomial order condition");

    CLI::App* jumps_cmd = app.add_subcommand("jumps", "scan for jumping numbers");
    add_curve(jumps_cmd);
    jumps_cmd->add_option("--upto", upto_text, "scan threshold, as p/q or an integer")->required();
    jumps_cmd->add_option("--degree-bound", degree_bound_raw, "n-degree verification window");
    jumps_cmd->add_flag("--candidates", show_candidates, "also list unverified candidates");
    jumps_cmd->add_flag("--plain-ord", plain_ord, "use the plain monomial order condition");

    CLI::App* gens_cmd = app.add_subcommand("gens", "list generators of the multiplier ideal");
    add_curve(gens_cmd);
    gens_cmd->add_option("--lambda", lambda_text, "level, as p/q or an integer")->required();
    gens_cmd->add_option("--degree-bound", degree_bound_raw, "n-degree window");
    gens_cmd->add_flag("--plain-ord", plain_ord, "use the plain monomial order condition");

    CLI::App* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
    add_curve(lct_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::optional<std::int64_t> degree_bound;
    if (degree_bound_raw >= 0)
        degree_bound = degree_bound_raw;

    try {
        if (analyze_cmd->parsed())
            return run_analyze(n, json);
        if (member_cmd->parsed())
            return run_member(n, lambda_text, poly_text, plain_ord, json);
        if (jumps_cmd->parsed())
            return run_jumps(n, upto_text, degree_bound, show_candidates, plain_ord, json);
        if (gens_cmd->parsed())
            return run_gens(n, lambda_text, degree_bound, plain_ord, json);
        if (lct_cmd->parsed())
            return run_lct(n, json);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
