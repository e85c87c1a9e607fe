#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramasum/checks.hpp"
#include "ramasum/theorems.hpp"

using namespace ramasum;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_suite_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<ComplexScalar> parse_params(const std::string& csv) {
    std::vector<ComplexScalar> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw InvalidInput("bad parameter '" + item + "'");
        out.emplace_back(v, 0.0);
    }
    return out;
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(out_file);
        f << text;
    }
}

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::TerminatedExactly: return "TerminatedExactly";
        case Termination::ToleranceReached: return "ToleranceReached";
        case Termination::MaxTermsReached: return "MaxTermsReached";
        case Termination::DivergenceDetected: return "DivergenceDetected";
    }
    return "?";
}

json eval_result_json(const EvalResult& r) {
    json j;
    j["value"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
    j["abs_error_estimate"] = r.abs_error_estimate;
    j["terms_used"] = r.terms_used;
    j["termination"] = termination_name(r.termination);
    if (r.termination == Termination::TerminatedExactly) j["terminated_at"] = r.terminated_at;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Summation-theorem verifier for 3F2(a,a,x;1+a,1+a+N;1) and its "
                 "supporting gamma/digamma/2F1 identities"};
    app.require_subcommand(1);
    app.fallthrough();  // let global options appear after the subcommand

    double tol = -1.0;
    std::uint64_t max_terms = 1000000;
    std::string format = "json";
    std::string out_file;
    std::uint64_t seed = 20240901;
    bool exact = false;
    app.add_option("--tol", tol, "tolerance (suite/operation default when omitted)");
    app.add_option("--max-terms", max_terms, "series term cap");
    app.add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", out_file, "write output to FILE instead of stdout");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_flag("--exact", exact, "rational mode where applicable");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a pFq series by direct summation");
    std::string num_csv, den_csv;
    double z_arg = 1.0;
    cmd_eval->add_option("--num", num_csv, "numerator parameters, comma separated")
        ->required();
    cmd_eval->add_option("--den", den_csv, "denominator parameters, comma separated")
        ->required();
    cmd_eval->add_option("--z", z_arg, "argument (default 1)");

    auto* cmd_theorem = app.add_subcommand("theorem", "closed form vs direct series");
    double t_a = 0.5, t_x = 0.0;
    unsigned t_N = 0;
    std::string mode = "both";
    cmd_theorem->add_option("--a", t_a)->required();
    cmd_theorem->add_option("--x", t_x)->required();
    cmd_theorem->add_option("--N", t_N)->required();
    cmd_theorem->add_option("--mode", mode, "closed|series|both")
        ->check(CLI::IsMember({"closed", "series", "both"}));

    auto* cmd_check = app.add_subcommand("check", "run an identity sweep suite");
    std::string suite, grid_text;
    cmd_check->add_option("--suite", suite, "gauss|theorem18|entry16|eq20|transforms|"
                                            "digamma_chain|factor_x|replay")
        ->required();
    cmd_check->add_option("--grid", grid_text, "var=start:stop:step;... or var=v1,v2,...");

    auto* cmd_replay = app.add_subcommand("replay", "replay the eps->0 proof limit");
    double r_a = 0.5, r_x = 0.3;
    unsigned r_N = 2;
    std::string eps_decades = "2:4";
    cmd_replay->add_option("--a", r_a)->required();
    cmd_replay->add_option("--x", r_x)->required();
    cmd_replay->add_option("--N", r_N)->required();
    cmd_replay->add_option("--eps-decades", eps_decades, "d1:d2, eps = 10^-d1 .. 10^-d2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_eval) {
            SeriesSpec spec(parse_params(num_csv), parse_params(den_csv),
                            ComplexScalar(z_arg, 0.0));
            const ConvergenceClass cls = classify(spec);
            if (cls.verdict == Verdict::DivergentAtUnit) {
                std::cerr << "error: series diverges at unit argument\n";
                return exit_domain;
            }
            const EvalResult r = evaluate(spec, tol < 0.0 ? 1e-14 : tol, max_terms);
            if (format == "json") {
                emit(eval_result_json(r).dump(2), out_file);
            } else if (format == "csv") {
                std::ostringstream os;
                os << "value_re,value_im,abs_error_estimate,terms_used,termination\n"
                   << fmt17(r.value.real()) << ',' << fmt17(r.value.imag()) << ','
                   << fmt17(r.abs_error_estimate) << ',' << r.terms_used << ','
                   << termination_name(r.termination) << '\n';
                emit(os.str(), out_file);
            } else {
                std::ostringstream os;
                os << "value = " << fmt17(r.value.real());
                if (r.value.imag() != 0.0) os << " + " << fmt17(r.value.imag()) << "i";
                os << "\nabs error estimate = " << fmt17(r.abs_error_estimate)
                   << "\nterms used = " << r.terms_used
                   << "\ntermination = " << termination_name(r.termination) << '\n';
                emit(os.str(), out_file);
            }
            return exit_ok;
        }

        if (*cmd_theorem) {
            const TheoremInput in{ComplexScalar(t_a, 0.0), ComplexScalar(t_x, 0.0), t_N};
            in.validate();
            json j;
            j["a"] = t_a;
            j["x"] = t_x;
            j["N"] = t_N;
            ComplexScalar closed{0.0, 0.0}, series_v{0.0, 0.0};
            if (mode != "series") {
                const RoutedValue rv = theorem_3f2_auto(in);
                closed = rv.value;
                j["closed"] = {{"re", closed.real()}, {"im", closed.imag()}};
                j["limit_path"] = rv.limit_path;
                if (rv.cancellation_warning) j["cancellation_warning"] = true;
            }
            if (mode != "closed") {
                const EvalResult r = evaluate(
                    SeriesSpec({in.a, in.a, in.x}, {in.a + 1.0, in.a + 1.0 + double(t_N)}),
                    tol < 0.0 ? 1e-13 : tol, max_terms);
                series_v = r.value;
                j["series"] = eval_result_json(r);
            }
            if (mode == "both") {
                j["residual"] =
                    std::abs(closed - series_v) / (1.0 + std::abs(closed));
            }
            if (format == "text") {
                std::ostringstream os;
                if (mode != "series") os << "closed = " << fmt17(closed.real()) << '\n';
                if (mode != "closed") os << "series = " << fmt17(series_v.real()) << '\n';
                if (mode == "both")
                    os << "residual = " << fmt17(j["residual"].get<double>()) << '\n';
                emit(os.str(), out_file);
            } else {
                emit(j.dump(2), out_file);
            }
            return exit_ok;
        }

        if (*cmd_check) {
            if (!is_known_suite(suite)) {
                std::cerr << "error: unknown suite '" << suite << "'\n";
                return exit_usage;
            }
            SuiteOptions opts;
            opts.tol = tol;
            opts.seed = seed;
            opts.exact = exact;
            if (!grid_text.empty()) {
                try {
                    opts.grid = GridSpec::parse(grid_text);
                } catch (const Error& e) {
                    std::cerr << "error: " << e.what() << '\n';
                    return exit_usage;
                }
            }
            const CheckReport rep = run_suite(suite, opts);
            if (format == "json")
                emit(rep.to_json(), out_file);
            else if (format == "csv")
                emit(rep.to_csv(), out_file);
            else
                emit(rep.to_text(), out_file);
            return rep.pass ? exit_ok : exit_suite_fail;
        }

        if (*cmd_replay) {
            int d1 = 0, d2 = 0;
            if (std::sscanf(eps_decades.c_str(), "%d:%d", &d1, &d2) != 2 || d1 > d2) {
                std::cerr << "error: --eps-decades expects d1:d2 with d1 <= d2\n";
                return exit_usage;
            }
            std::vector<double> eps;
            for (int d = d1; d <= d2; ++d) eps.push_back(std::pow(10.0, -d));
            const TheoremInput in{ComplexScalar(r_a, 0.0), ComplexScalar(r_x, 0.0), r_N};
            const ProofReplayTrace trace = proof_replay(in, eps);
            json j;
            j["a"] = r_a;
            j["x"] = r_x;
            j["N"] = r_N;
            j["closed_form"] = {{"re", trace.closed_form.real()},
                                {"im", trace.closed_form.imag()}};
            j["epsilon_values"] = trace.epsilon_values;
            j["residuals"] = trace.residuals;
            j["tail_magnitudes"] = trace.tail_magnitudes;
            j["fitted_order"] = trace.fitted_order;
            if (format == "text") {
                std::ostringstream os;
                for (std::size_t i = 0; i < eps.size(); ++i)
                    os << "eps = " << fmt17(trace.epsilon_values[i])
                       << "  residual = " << fmt17(trace.residuals[i]) << '\n';
                os << "fitted order = " << fmt17(trace.fitted_order) << '\n';
                emit(os.str(), out_file);
            } else {
                emit(j.dump(2), out_file);
            }
            return exit_ok;
        }
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const ConvergenceViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
