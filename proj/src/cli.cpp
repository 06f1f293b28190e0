// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#include "cfp/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "CLI11.hpp"
#include "cfp/error.hpp"
#include "cfp/io.hpp"
#include "cfp/reduction.hpp"
#include "cfp/solvers.hpp"

namespace cfp::cli {

namespace {

solvers::Objective parse_objective(const std::string& s) {
    if (s == "f1") return solvers::Objective::f1;
    if (s == "efficacy") return solvers::Objective::efficacy;
    throw UsageError("objective must be 'f1' or 'efficacy'");
}

solvers::Method parse_method(const std::string& s) {
    if (s == "oracle") return solvers::Method::oracle;
    if (s == "exact") return solvers::Method::exact;
    if (s == "heuristic") return solvers::Method::heuristic;
    throw UsageError("method must be 'oracle', 'exact' or 'heuristic'");
}

// "3", "-2", "11/23" or "0.85"; exact, no floating point anywhere.
Rational parse_rational(const std::string& s) {
    auto fail = [&]() -> Rational {
        throw UsageError("cannot parse '" + s + "' as a rational number");
    };
    bool negative = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    std::int64_t num = 0, den = 1;
    bool digits = false;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
        if (num > (INT64_MAX - 9) / 10) return fail();
        num = num * 10 + (s[i] - '0');
        digits = true;
    }
    if (!digits) return fail();
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::int64_t d = 0;
        bool ddigits = false;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
            if (d > (INT64_MAX - 9) / 10) return fail();
            d = d * 10 + (s[i] - '0');
            ddigits = true;
        }
        if (!ddigits || d == 0 || i != s.size()) return fail();
        den = d;
    } else if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
            if (num > (INT64_MAX - 9) / 10 || den > INT64_MAX / 10) return fail();
            num = num * 10 + (s[i] - '0');
            den *= 10;
        }
        if (i != s.size()) return fail();
    } else if (i != s.size()) {
        return fail();
    }
    return Rational(negative ? -num : num, den);
}

void print_report(std::ostream& out, const ObjectiveReport& r) {
    out << "n1 " << r.n1 << "\n"
        << "e " << r.e << "\n"
        << "v " << r.v << "\n"
        << "f1 " << r.f1 << "\n"
        << "efficacy " << (r.f2 ? r.f2->str_fraction() : "undefined") << "\n";
}

struct Args {
    std::string objective = "f1";
    std::string method = "exact";
    std::string to;
    std::string threshold;
    std::string density = "1/2";
    std::string instance_path;
    std::string solution_path;
    std::uint64_t seed = 1;
    int threads = 1;
    int m = 1;
    int p = 1;
    std::int64_t c = -1;
    bool has_c = false;
    bool merged = false;
    bool via_reduction = false;
};

int run_solve(const Args& a, std::ostream& out) {
    // argument validation first, file input second
    solvers::Objective objective = parse_objective(a.objective);
    solvers::Method method = parse_method(a.method);
    CfpInstance instance = io::parse_instance(io::read_file(a.instance_path));
    solvers::SolveOptions opts;
    opts.threads = a.threads;
    opts.seed = a.seed;
    solvers::SolveResult res;
    switch (method) {
        case solvers::Method::oracle:
            res = solvers::oracle_solve(instance, objective, opts);
            break;
        case solvers::Method::exact:
            res = objective == solvers::Objective::f1
                      ? solvers::exact_solve_f1(instance, opts)
                      : solvers::exact_solve_f2(instance, opts);
            break;
        case solvers::Method::heuristic:
            res = solvers::heuristic_solve(instance, objective, opts);
            break;
    }
    print_report(out, res.report);
    out << io::write_solution(res.solution);
    return 0;
}

int run_decide(const Args& a, std::ostream& out) {
    solvers::Objective objective = parse_objective(a.objective);
    Rational threshold = parse_rational(a.threshold);
    if (a.via_reduction) {
        if (objective != solvers::Objective::f1) {
            throw UsageError("--via-reduction decides the f1 objective");
        }
        if (threshold.den() != 1) {
            throw UsageError("--via-reduction takes an integer threshold");
        }
    }
    CfpInstance instance = io::parse_instance(io::read_file(a.instance_path));
    solvers::SolveOptions opts;
    opts.threads = a.threads;
    bool yes;
    if (a.via_reduction) {
        reduction::EfficacySolver solver = [&](const CfpInstance& inst,
                                               CfpSolution* witness) {
            solvers::SolveResult r = solvers::exact_solve_f2(inst, opts);
            *witness = r.solution;
            return r.report.efficacy();
        };
        yes = reduction::decide_cfp1_via_cfp2(instance, threshold.num(), solver).yes;
    } else {
        yes = solvers::decide(instance, objective, threshold, solvers::Method::exact, opts)
                  .yes;
    }
    out << (yes ? "yes" : "no") << "\n";
    return yes ? 0 : 1;
}

int run_verify(const Args& a, std::ostream& out) {
    CfpInstance instance = io::parse_instance(io::read_file(a.instance_path));
    // The parser checks shape and self-consistency (exit 65 on failure);
    // cell-bound violations are validate()'s to report, with exit 1.
    CfpSolution solution = io::parse_solution(io::read_file(a.solution_path), instance);
    std::vector<std::string> violations = validate(instance, solution);
    if (!violations.empty()) {
        for (const std::string& v : violations) out << "violation: " << v << "\n";
        return 1;
    }
    print_report(out, evaluate(instance, solution));
    return 0;
}

int run_reduce(const Args& a, std::ostream& out) {
    CfpInstance instance = io::parse_instance(io::read_file(a.instance_path));
    reduction::ExtendedInstance ext = reduction::extend_instance(instance);
    if (a.merged) {
        CfpInstance merged = ext.merged().first;
        out << "# row-weights:";
        for (std::int32_t w : merged.row_weights()) out << " " << w;
        out << "\n# col-weights:";
        for (std::int32_t u : merged.col_weights()) out << " " << u;
        out << "\n# cell-bound: " << merged.cell_bound() << "\n";
        out << io::write_instance(merged);
    } else {
        out << "# cell-bound: " << ext.cell_bound() << "\n";
        out << io::write_instance(ext.full());
    }
    if (a.has_c) {
        out << "threshold: " << reduction::threshold_transform(ext, a.c).str_fraction()
            << "\n";
    }
    return 0;
}

int run_convert(const Args& a, std::ostream& out) {
    if (a.to != "bgep" && a.to != "cfp") {
        throw UsageError("--to must be 'bgep' or 'cfp'");
    }
    std::string text = io::read_file(a.instance_path);
    if (a.to == "bgep") {
        out << io::write_edge_list(bgep::cfp_to_bgep(io::parse_instance(text)));
    } else {
        out << io::write_instance(bgep::bgep_to_cfp(io::parse_edge_list(text)));
    }
    return 0;
}

int run_gen(const Args& a, std::ostream& out) {
    Rational density = [&] {
        try {
            return parse_rational(a.density);
        } catch (const UsageError&) {
            throw UsageError("cannot parse '" + a.density + "' as a density");
        }
    }();
    if (density < Rational(0, 1) || Rational(1, 1) < density) {
        throw UsageError("density must lie in [0, 1]");
    }
    if (a.m < 1 || a.p < 1) throw UsageError("dimensions must be positive");
    out << io::write_instance(io::generate(a.m, a.p, density, a.seed));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cell formation toolkit: exact and heuristic machine-part "
                 "clustering under the f1 = e + v and grouping-efficacy objectives"};
    app.name(args.empty() ? "cfp" : args[0]);
    app.set_help_all_flag("--help-all", "print help for every subcommand");
    app.require_subcommand(1);
    Args a;

    CLI::App* solve = app.add_subcommand("solve", "solve an instance and print the "
                                                  "objective report and solution");
    solve->add_option("--objective", a.objective, "f1 or efficacy")->required();
    solve->add_option("--method", a.method, "oracle, exact or heuristic");
    solve->add_option("--seed", a.seed, "heuristic start seed");
    solve->add_option("--threads", a.threads, "worker threads (0 = hardware)");
    solve->add_option("file", a.instance_path, "instance file")->required();

    CLI::App* decide = app.add_subcommand("decide", "answer a threshold question; "
                                                    "exit 0 = yes, 1 = no");
    decide->add_option("--objective", a.objective, "f1 or efficacy")->required();
    decide->add_option("--threshold", a.threshold,
                       "f1: yes iff min f1 <= T; efficacy: yes iff max >= T")
        ->required();
    decide->add_flag("--via-reduction", a.via_reduction,
                     "answer the f1 question through the efficacy extension");
    decide->add_option("--threads", a.threads, "worker threads (0 = hardware)");
    decide->add_option("file", a.instance_path, "instance file")->required();

    CLI::App* verify = app.add_subcommand("verify", "check a solution file against an "
                                                    "instance; exit 0 = valid");
    verify->add_option("instance", a.instance_path, "instance file")->required();
    verify->add_option("solution", a.solution_path, "solution file")->required();

    CLI::App* reduce = app.add_subcommand("reduce", "print the efficacy extension of "
                                                    "an instance");
    reduce->add_option("--c", a.c, "also print the transformed threshold for this c");
    reduce->add_flag("--merged", a.merged, "print the duplicate-collapsed form");
    reduce->add_option("file", a.instance_path, "instance file")->required();

    CLI::App* convert = app.add_subcommand("convert", "translate between instance and "
                                                      "edge-list formats");
    convert->add_option("--to", a.to, "bgep or cfp")->required();
    convert->add_option("file", a.instance_path, "input file")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("-m", a.m, "machines")->required();
    gen->add_option("-p", a.p, "parts")->required();
    gen->add_option("--density", a.density, "one-probability, e.g. 1/3 or 0.3");
    gen->add_option("--seed", a.seed, "generator seed");

    try {
        std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
        std::reverse(rest.begin(), rest.end());
        app.parse(std::move(rest));
        a.has_c = reduce->count("--c") != 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    }

    try {
        if (solve->parsed()) return run_solve(a, out);
        if (decide->parsed()) return run_decide(a, out);
        if (verify->parsed()) return run_verify(a, out);
        if (reduce->parsed()) return run_reduce(a, out);
        if (convert->parsed()) return run_convert(a, out);
        if (gen->parsed()) return run_gen(a, out);
        err << "error: no subcommand\n";
        return 64;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 65;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 70;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cfp::cli
