#include "farey/cli.hpp"

#include "farey/bratteli.hpp"
#include "farey/contfrac.hpp"
#include "farey/decide_m1.hpp"
#include "farey/effros_shen.hpp"
#include "farey/formula.hpp"
#include "farey/germ.hpp"
#include "farey/goedel.hpp"
#include "farey/pwl.hpp"
#include "farey/random_formula.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace farey::cli {

namespace {

// Formulas come from positional arguments or, with --file, one per
// nonblank line of a file.
struct FormulaArgs {
    std::vector<std::string> texts;
    std::string file;

    void add_to(CLI::App* cmd) {
        cmd->add_option("formulas", texts, "formulas (quote them)");
        cmd->add_option("--file", file, "read formulas from a file, one per line");
    }

    std::vector<Formula> get(std::size_t count) const {
        std::vector<std::string> sources = texts;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open " + file);
            std::string line;
            while (std::getline(in, line))
                if (line.find_first_not_of(" \t\r") != std::string::npos) sources.push_back(line);
        }
        if (sources.size() != count)
            throw std::invalid_argument("expected " + std::to_string(count) + " formula(s), got " +
                                        std::to_string(sources.size()));
        std::vector<Formula> out;
        for (const auto& s : sources) out.push_back(parse(s));
        return out;
    }
};

Side parse_side(const std::string& s) {
    if (s == "+" || s == "right") return Side::Right;
    if (s == "-" || s == "left") return Side::Left;
    throw std::invalid_argument("side must be + or -");
}

int verdict(bool equal, std::ostream& out, const std::string& yes, const std::string& no) {
    out << (equal ? yes : no) << '\n';
    return equal ? kTrue : kFalse;
}

void run_bench(std::ostream& out, std::uint64_t max_length, std::uint64_t seed) {
    // Worst case for the search decider: equal pairs, every point visited.
    Rng rng(seed);
    out << "# bench: equal_search on equal pairs; wall-clock timings vary between runs\n";
    out << "# length(phi)+length(psi)  bound  points  milliseconds\n";
    for (std::uint64_t target = 10; target <= max_length; target += 10) {
        Formula phi = random_formula(rng, target);
        while (phi.length() + 4 < target) phi = random_formula(rng, target);
        Formula psi = random_equivalent(phi, rng, 3);
        auto start = std::chrono::steady_clock::now();
        Verdict v = equal_search(phi, psi);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::uint64_t bound = search_bound(phi, psi);
        if (!v.equal) throw std::logic_error("bench pair not equal");
        out << std::setw(6) << phi.length() + psi.length() << std::setw(8) << bound << std::setw(12)
            << (bound + 1) * (bound + 2) / 2 << std::setw(12) << std::fixed << std::setprecision(2) << ms << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Word problems of the Farey AF algebra and its quotients", "farey"};
    app.require_subcommand(1);
    int status = kTrue;

    FormulaArgs parse_args;
    bool unicode = false;
    auto* parse_cmd = app.add_subcommand("parse", "print the canonical core form and its length");
    parse_args.add_to(parse_cmd);
    parse_cmd->add_flag("--unicode", unicode, "print ⊕ instead of +");
    parse_cmd->callback([&] {
        Formula f = parse_args.get(1)[0];
        out << print(f, {unicode}) << '\n' << "length " << f.length() << '\n';
    });

    FormulaArgs eval_args;
    std::string at;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula at a rational point");
    eval_args.add_to(eval_cmd);
    eval_cmd->add_option("--at", at, "point p/q in [0,1]")->required();
    eval_cmd->callback([&] { out << to_string(eval_formula(eval_args.get(1)[0], parse_rat(at))) << '\n'; });

    FormulaArgs pwl_args;
    auto* pwl_cmd = app.add_subcommand("pwl", "print the McNaughton function as JSON");
    pwl_args.add_to(pwl_cmd);
    pwl_cmd->callback([&] { out << to_json(semantics(pwl_args.get(1)[0])) << '\n'; });

    FormulaArgs eq_args;
    std::string eq_method = "search";
    auto* eq_cmd = app.add_subcommand("eq", "decide equality in the Farey algebra");
    eq_args.add_to(eq_cmd);
    eq_cmd->add_option("--method", eq_method, "search, canonical or both")
        ->check(CLI::IsMember({"search", "canonical", "both"}));
    eq_cmd->callback([&] {
        auto fs = eq_args.get(2);
        std::optional<Verdict> search, canonical;
        if (eq_method != "canonical") search = equal_search(fs[0], fs[1]);
        if (eq_method != "search") canonical = equal_canonical(fs[0], fs[1]);
        if (search && canonical && search->equal != canonical->equal) {
            err << "inconsistent: search says " << (search->equal ? "equal" : "not equal") << ", canonical says "
                << (canonical->equal ? "equal" : "not equal") << '\n';
            status = kInconsistent;
            return;
        }
        const Verdict& v = search ? *search : *canonical;
        if (v.equal) {
            out << "equal\n";
            status = kTrue;
        } else {
            out << "not equal (witness " << to_string(*v.witness) << ")\n";
            status = kFalse;
        }
    });

    FormulaArgs germ_args;
    std::string germ_point, germ_side;
    auto* germ_cmd = app.add_subcommand("germ-eq", "decide equality of one-sided germs at a rational");
    germ_args.add_to(germ_cmd);
    germ_cmd->add_option("--point", germ_point, "rational p/q")->required();
    germ_cmd->add_option("--side", germ_side, "+ (right) or - (left)")->required();
    germ_cmd->callback([&] {
        auto fs = germ_args.get(2);
        GermIdeal ideal{parse_rat(germ_point), parse_side(germ_side)};
        status = verdict(equal_in_prime_quotient(fs[0], fs[1], ideal), out, "equal germs", "different germs");
    });

    FormulaArgs quot_args;
    std::string xi;
    auto* quot_cmd = app.add_subcommand("quot-eq", "decide equality at a rational point");
    quot_args.add_to(quot_cmd);
    quot_cmd->add_option("--xi", xi, "rational p/q in [0,1]")->required();
    quot_cmd->callback([&] {
        auto fs = quot_args.get(2);
        status = verdict(equal_in_prime_quotient(fs[0], fs[1], MaximalRational{parse_rat(xi)}), out,
                         "equal at " + to_string(parse_rat(xi)), "not equal at " + to_string(parse_rat(xi)));
    });

    FormulaArgs es_args;
    std::string theta, es_method = "cf";
    auto* es_cmd = app.add_subcommand("es-eq", "decide equality at an irrational point theta");
    es_args.add_to(es_cmd);
    es_cmd->add_option("--theta", theta, "cf:<pre>;<period> | inv-e | alg:poly=..:lo=..:hi=.. | pi-3")
        ->required();
    es_cmd->add_option("--method", es_method, "cf, cut or both")->check(CLI::IsMember({"cf", "cut", "both"}));
    es_cmd->callback([&] {
        auto fs = es_args.get(2);
        ThetaSpec spec = parse_theta(theta);
        std::optional<bool> by_cf, by_cut;
        if (es_method != "cut") by_cf = equal_cf(fs[0], fs[1], spec);
        if (es_method != "cf") by_cut = equal_left_cut(fs[0], fs[1], left_cut(spec));
        if (by_cf && by_cut && *by_cf != *by_cut) {
            err << "inconsistent: convergent method and left-cut method disagree\n";
            status = kInconsistent;
            return;
        }
        status = verdict(by_cf ? *by_cf : *by_cut, out, "equal in F_theta", "not equal in F_theta");
    });

    unsigned depth = 0;
    std::string format = "dot";
    auto* br_cmd = app.add_subcommand("bratteli", "emit the Farey Bratteli diagram");
    br_cmd->add_option("--depth", depth, "deepest level")->required()->check(CLI::Range(0u, 24u));
    br_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    br_cmd->callback([&] {
        BratteliDiagram g = build_diagram(depth);
        out << (format == "dot" ? to_dot(g) : to_json(g) + "\n");
    });

    std::uint64_t hat_k = 0;
    auto* hat_cmd = app.add_subcommand("hat", "print the hat function b_k as JSON");
    hat_cmd->add_option("k", hat_k)->required();
    hat_cmd->callback([&] { out << to_json(hat(hat_k)) << '\n'; });

    std::uint64_t beta_k = 0;
    auto* beta_cmd = app.add_subcommand("beta", "print a formula for b_k");
    beta_cmd->add_option("k", beta_k)->required();
    beta_cmd->callback([&] { out << print(beta(beta_k)) << '\n'; });

    std::string eta_text = "2i+4";
    std::uint64_t t_max = 10, demo_k = 4;
    auto* demo_cmd = app.add_subcommand("goedel-demo", "bounded ideal-membership search for b_k");
    demo_cmd->add_option("--eta", eta_text, "enumeration, e.g. \"2i+4\" or \"primes\"");
    demo_cmd->add_option("--tmax", t_max, "largest t to try")->check(CLI::PositiveNumber);
    demo_cmd->add_option("--k", demo_k, "hat index")->required();
    demo_cmd->callback([&] {
        EnumerationOracle eta = EnumerationOracle::parse(eta_text);
        auto t = member_ideal_bounded(beta(demo_k), eta, t_max);
        out << "eta = " << eta.name() << ", t_max = " << t_max << ", k = " << demo_k << '\n';
        if (t) {
            out << "member: " << *t << ".g_" << *t << " >= b_" << demo_k << '\n';
            status = kTrue;
            return;
        }
        out << "not found up to t = " << t_max << '\n';
        if (demo_k > 0 && vanishing_certificate(demo_k, eta, t_max))
            out << "certificate: g_" << t_max << "(1/" << demo_k << ") = 0 < b_" << demo_k << "(1/" << demo_k
                << ")\n";
        status = kFalse;
    });

    std::uint64_t bench_max = 60, bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "time the search decider against formula length");
    bench_cmd->add_option("--max-length", bench_max, "largest formula length")->check(CLI::Range(10, 400));
    bench_cmd->add_option("--seed", bench_seed);
    bench_cmd->callback([&] { run_bench(out, bench_max, bench_seed); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kTrue;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const LinearityViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return status;
}

}  // namespace farey::cli
