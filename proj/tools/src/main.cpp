// Command-line front end. Exit codes: 0 success / verification passed,
// 1 verification failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <muharm/cyclotomic.hpp>
#include <muharm/mu_bridge.hpp>
#include <muharm/sampler.hpp>
#include <muharm/text_io.hpp>
#include <muharm/verify.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace muharm;

namespace {

ordered_json report_json(const VerificationReport& r, bool timing) {
    ordered_json j;
    j["command"] = "verify";
    j["suite"] = r.id;
    j["N"] = r.n;
    j["m"] = r.m;
    j["M"] = r.trunc;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases) {
        ordered_json jc;
        jc["label"] = c.label;
        jc["element"] = c.element;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        cases.push_back(std::move(jc));
    }
    j["cases"] = std::move(cases);
    j["pass_count"] = r.pass_count();
    j["case_count"] = r.cases.size();
    j["passed"] = r.passed();
    if (timing) j["duration_seconds"] = r.duration_seconds;
    return j;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for cyclotomic harmonic coproducts"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    bool timing = false;
    app.add_flag("--timing", timing,
                 "include wall-clock durations in verify output (breaks byte determinism)");

    auto* cop = app.add_subcommand("coproduct", "coproduct of a W element");
    cop->fallthrough();
    std::string cop_elem;
    cop->add_option("element", cop_elem, "element of W, group-algebra grammar");
    int cop_n = 1;
    cop->add_option("--N", cop_n, "cyclotomic level")->check(CLI::Range(1, 1000));
    std::vector<std::string> closed;
    cop->add_option("--closed-form", closed,
                    "depth m (>= 2) and Laurent polynomial P: coproduct of "
                    "(X0^N-1)^(m-1) P(X0) (X1-1) by the closed formula")
        ->expected(2);

    auto* val = app.add_subcommand("valuation", "filtration degree of an element");
    val->fallthrough();
    std::string val_elem;
    val->add_option("element", val_elem)->required();
    int val_n = 1, val_M = 6;
    val->add_option("--N", val_n)->check(CLI::Range(1, 1000));
    val->add_option("--M", val_M, "truncation window")->check(CLI::Range(0, 64));
    std::string oracle = "both";
    val->add_option("--oracle", oracle)->check(CLI::IsMember({"both", "mu", "schreier"}));

    auto* gr = app.add_subcommand("gr", "leading associated-graded slice");
    gr->fallthrough();
    std::string gr_elem;
    gr->add_option("element", gr_elem)->required();
    int gr_n = 1, gr_M = 6;
    gr->add_option("--N", gr_n)->check(CLI::Range(1, 1000));
    gr->add_option("--M", gr_M)->check(CLI::Range(0, 64));

    auto* har = app.add_subcommand("harmonic", "harmonic coproduct of a graded element");
    har->fallthrough();
    std::string har_elem;
    har->add_option("element", har_elem, "z-word grammar")->required();
    int har_n = 1;
    har->add_option("--N", har_n)->check(CLI::Range(1, 1000));

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->fallthrough();
    std::string suite;
    ver->add_option("suite", suite)->required()
        ->check(CLI::IsMember({"thm1", "thm2", "axioms", "oracles"}));
    int ver_n = 1, ver_m = 2, ver_samples = 50, ver_M = 6;
    unsigned long long ver_seed = 0;
    ver->add_option("--N", ver_n)->check(CLI::Range(1, 1000));
    ver->add_option("--m", ver_m)->check(CLI::Range(0, 32));
    ver->add_option("--samples", ver_samples)->check(CLI::Range(1, 100000));
    ver->add_option("--seed", ver_seed);
    ver->add_option("--M", ver_M)->check(CLI::Range(0, 64));

    auto* smp = app.add_subcommand("sample", "draw a seeded element of a stratum");
    smp->fallthrough();
    std::string what;
    smp->add_option("what", what)->required()->check(CLI::IsMember({"fm"}));
    int smp_n = 1, smp_m = 2;
    unsigned long long smp_seed = 0;
    smp->add_option("--N", smp_n)->check(CLI::Range(1, 1000));
    smp->add_option("--m", smp_m)->check(CLI::Range(-32, 32));
    smp->add_option("--seed", smp_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool json_out = format == "json";

    try {
        if (app.got_subcommand(cop)) {
            std::optional<GroupAlgebraElement> v;
            std::optional<TensorElement> generic;
            if (!cop_elem.empty()) {
                v = parse_group_element(cop_elem);
                generic = coproduct(*v);
            }
            if (closed.empty() && !generic) {
                std::cerr << "coproduct: give an element, --closed-form m P, or both\n";
                return 2;
            }
            ordered_json j;
            j["command"] = "coproduct";
            j["N"] = cop_n;
            if (v) j["element"] = to_string(*v);
            if (closed.empty()) {
                if (json_out) {
                    j["result"] = to_string(*generic);
                    print_json(j);
                } else {
                    std::cout << to_string(*generic) << "\n";
                }
                return 0;
            }
            int m = 0;
            try {
                m = std::stoi(closed[0]);
            } catch (...) {
                std::cerr << "coproduct: --closed-form depth must be an integer\n";
                return 2;
            }
            if (m < 2) {
                std::cerr << "coproduct: --closed-form depth must be >= 2\n";
                return 2;
            }
            LaurentPoly P = parse_laurent(closed[1]);
            TensorElement tc = coproduct_closed_form(m, P, cop_n);
            j["closed_form"] = {{"m", m}, {"P", to_string(P)}};
            if (!generic) {
                if (json_out) {
                    j["result"] = to_string(tc);
                    print_json(j);
                } else {
                    std::cout << to_string(tc) << "\n";
                }
                return 0;
            }
            bool agree = tc == *generic;
            if (json_out) {
                j["closed"] = to_string(tc);
                j["generic"] = to_string(*generic);
                j["agree"] = agree;
                print_json(j);
            } else {
                std::cout << "closed-form: " << to_string(tc) << "\n"
                          << "generic: " << to_string(*generic) << "\n"
                          << "agreement: " << (agree ? "yes" : "no") << "\n";
            }
            return agree ? 0 : 1;
        }

        if (app.got_subcommand(val)) {
            GroupAlgebraElement v = parse_group_element(val_elem);
            std::optional<FiltrationDegree> dmu, dsch;
            if (oracle != "schreier") dmu = filtration_degree(v, val_n, val_M);
            if (oracle != "mu") dsch = oracle_filtration_degree(v, val_n, val_M);
            bool agree = !dmu || !dsch || *dmu == *dsch;
            if (json_out) {
                ordered_json j;
                j["command"] = "valuation";
                j["N"] = val_n;
                j["M"] = val_M;
                j["element"] = to_string(v);
                if (dmu) j["mu"] = dmu->str();
                if (dsch) j["schreier"] = dsch->str();
                if (dmu && dsch) j["agree"] = agree;
                print_json(j);
            } else if (dmu && dsch) {
                std::cout << "mu: " << dmu->str() << "\n"
                          << "schreier: " << dsch->str() << "\n"
                          << "agreement: " << (agree ? "yes" : "no") << "\n";
            } else {
                std::cout << (dmu ? dmu->str() : dsch->str()) << "\n";
            }
            return agree ? 0 : 1;
        }

        if (app.got_subcommand(gr)) {
            GroupAlgebraElement v = parse_group_element(gr_elem);
            ordered_json j;
            j["command"] = "gr";
            j["N"] = gr_n;
            j["M"] = gr_M;
            j["element"] = to_string(v);
            try {
                auto [deg, lead] = leading_term(v, gr_n, gr_M);
                if (json_out) {
                    j["degree"] = std::to_string(deg);
                    j["leading"] = to_string(lead);
                    print_json(j);
                } else {
                    std::cout << "degree: " << deg << "\n"
                              << "leading: " << to_string(lead) << "\n";
                }
            } catch (const std::domain_error&) {
                // valuation beyond the window: a valid answer, only a bound
                if (json_out) {
                    j["degree"] = ">=" + std::to_string(gr_M + 1);
                    print_json(j);
                } else {
                    std::cout << "degree: >=" << gr_M + 1 << "\n";
                }
            }
            return 0;
        }

        if (app.got_subcommand(har)) {
            ZWordElement z = parse_zword_element(har_elem, har_n);
            ZTensorElement t = harmonic_coproduct(z, har_n);
            if (json_out) {
                ordered_json j;
                j["command"] = "harmonic";
                j["N"] = har_n;
                j["element"] = to_string(z);
                j["result"] = to_string(t);
                print_json(j);
            } else {
                std::cout << to_string(t) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(ver)) {
            VerificationReport r;
            if (suite == "thm1") {
                r = verify_thm1(ver_n, ver_m, ver_samples, ver_seed);
            } else if (suite == "thm2") {
                r = verify_thm2(ver_n, ver_m);
            } else if (suite == "axioms") {
                r = verify_axioms(ver_n, ver_samples, ver_seed);
            } else {
                r = verify_oracles(ver_n, ver_samples, ver_seed, ver_M);
            }
            if (json_out) {
                print_json(report_json(r, timing));
            } else {
                std::cout << r.to_text(timing);
            }
            return r.passed() ? 0 : 1;
        }

        if (app.got_subcommand(smp)) {
            SeededRng rng(smp_seed);
            SampleBudget budget;
            GroupAlgebraElement v = sample_FmW(smp_n, smp_m, rng, budget);
            if (json_out) {
                ordered_json j;
                j["command"] = "sample";
                j["N"] = smp_n;
                j["m"] = smp_m;
                j["seed"] = smp_seed;
                j["element"] = to_string(v);
                print_json(j);
            } else {
                std::cout << to_string(v) << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
