#include "CLI11.hpp"

#include "oddarc/associator.hpp"
#include "oddarc/centers.hpp"
#include "oddarc/springer.hpp"
#include "oddarc/verify.hpp"

#include <iostream>
#include <stdexcept>

using namespace oddarc;

namespace {

constexpr int kOk = 0, kFailed = 1, kBadInput = 2;

struct Options {
    int n = 2;
    std::string rule = "default";
    // mul
    std::string x, y;
    bool even = false, oracle = false;
    // center
    std::string flavor = "odd";
    // springer
    bool ranks = false, basis = false, check_iso = false;
    // assoc
    bool phi0 = false, cocycle = false;
    std::string compare;
    // qbinom
    int m = 0, k = 0;
    // verify
    std::string suite = "all";
};

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

int run_bn(const Options& o) {
    const ArcRing& R = ArcRing::get(o.n);
    long long s = 0;
    for (const auto& a : R.matchings()) {
        std::cout << a.word() << " t=" << lower_arc_count(a) << '\n';
        s += 1LL << lower_arc_count(a);
    }
    std::cerr << "catalan(" << o.n << ") = " << R.count() << ", sum 2^t(a) = " << s << '\n';
    return kOk;
}

int run_mul(const Options& o) {
    if (o.even && o.oracle) throw std::invalid_argument("--oracle is only available for the odd theory");
    const MultiplicationRule rule = MultiplicationRule::by_name(o.n, o.rule);
    const RingElement x = parse_element(o.n, o.x), y = parse_element(o.n, o.y);
    const RingElement p = multiply(rule, x, y, o.even ? Theory::Even : Theory::Odd);
    std::cout << format_element(p) << '\n';
    if (o.oracle) {
        const RingElement q = multiply_diagrammatic(rule, x, y);
        const bool agree = p == q;
        std::cout << "oracle: " << (agree ? "agree" : "DISAGREE " + format_element(q)) << '\n';
        return agree ? kOk : kFailed;
    }
    return kOk;
}

int run_center(const Options& o) {
    const MultiplicationRule rule = MultiplicationRule::by_name(o.n, o.rule);
    CenterBasis b = o.flavor == "even" ? even_center(o.n) : o.flavor == "odd-ring" ? ring_center(o.n, rule) : odd_center(o.n, rule);
    std::cout << b.str();
    return kOk;
}

int run_springer(const Options& o) {
    if (o.check_iso) {
        IsoCertificate c = verify_springer_iso(o.n, MultiplicationRule::by_name(o.n, o.rule));
        std::cout << c.str();
        return c.pass ? kOk : kFailed;
    }
    const QuotientPresentation Q = quotient_presentation(o.n);
    if (o.basis) {
        for (std::size_t d = 0; d < Q.basis.size(); ++d) {
            std::cout << "degree " << d << ':';
            for (const auto& m : Q.basis[d]) std::cout << ' ' << format_monomial_x(m);
            std::cout << '\n';
        }
        return kOk;
    }
    std::cout << "quotient_rank: " << join_ints(Q.ranks) << " (total " << Q.total_rank() << ")\n"
              << "torsion_free: " << (Q.torsion_free ? "yes" : "no") << '\n'
              << "left_ideal_equals_right_ideal: " << (Q.left_equals_right ? "yes" : "no") << '\n'
              << "squares_vanish: " << (Q.squares_vanish ? "yes" : "no") << '\n'
              << "basis_mod2: " << (Q.mod2_basis ? "yes" : "no") << '\n';
    return kOk;
}

int run_assoc(const Options& o) {
    const MultiplicationRule rule = MultiplicationRule::by_name(o.n, o.rule);
    if (!o.compare.empty()) {
        RuleIsomorphism iso = build_rule_isomorphism(rule, MultiplicationRule::by_name(o.n, o.compare));
        std::cout << iso.str();
        return kOk;
    }
    const SignTable phi = phi0_table(rule);
    if (o.cocycle) {
        const ArcRing& R = ArcRing::get(o.n);
        CocycleReport cr = cocycle_defect(phi);
        std::cout << "checked_quintuples: " << cr.checked << '\n' << "defects: " << cr.defects.size() << '\n';
        for (const auto& q : cr.defects) {
            for (std::size_t i = 0; i < q.size(); ++i) std::cout << (i ? "|" : "") << R.matching(q[i]).word();
            std::cout << '\n';
        }
        std::cout << "defects_equal_scission_cup: " << (cr.defects_are_scission_cup ? "yes" : "no") << '\n';
        auto lam = solve_coboundary(phi);
        std::cout << "coboundary_solution: " << (lam ? "found" : "none") << '\n';
        return cr.pass && lam ? kOk : kFailed;
    }
    std::cout << phi.str();
    return kOk;
}

int run_verify(const Options& o) {
    SuiteReport r = run_suite(o.suite, o.n);
    std::cout << r.str();
    if (const Check* f = r.first_failure()) {
        std::cout << "FAILED: " << f->name << '\n';
        return kFailed;
    }
    std::cout << "OK\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arc rings, odd centers and associators"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> rules{"default", "ord"};

    auto* bn = app.add_subcommand("bn", "List crossingless matchings with lower-arc counts");
    bn->add_option("--n", o.n, "number of arcs")->required()->check(CLI::Range(1, 8));

    auto* mul = app.add_subcommand("mul", "Multiply two ring elements");
    mul->add_option("--n", o.n)->required()->check(CLI::Range(1, 8));
    mul->add_option("--rule", o.rule)->check(CLI::IsMember(rules));
    mul->add_option("--x", o.x, "left factor")->required();
    mul->add_option("--y", o.y, "right factor")->required();
    mul->add_flag("--even", o.even, "use the even theory");
    mul->add_flag("--oracle", o.oracle, "cross-check against the diagrammatic sign tables");

    auto* center = app.add_subcommand("center", "Compute a center as a graded lattice");
    center->add_option("--n", o.n)->required()->check(CLI::Range(1, 4));
    center->add_option("--rule", o.rule)->check(CLI::IsMember(rules));
    center->add_option("--flavor", o.flavor)->check(CLI::IsMember({"even", "odd", "odd-ring"}));

    auto* springer = app.add_subcommand("springer", "Odd Springer quotient and the isomorphism check");
    springer->add_option("--n", o.n)->required()->check(CLI::Range(1, 4));
    auto* g_ranks = springer->add_flag("--ranks", o.ranks, "graded ranks and structural checks (default)");
    auto* g_basis = springer->add_flag("--basis", o.basis, "greedy-lex monomial basis");
    auto* g_iso = springer->add_flag("--check-iso", o.check_iso, "certify the isomorphism with the odd center");
    springer->add_option("--rule", o.rule)->check(CLI::IsMember(rules));
    g_ranks->excludes(g_basis)->excludes(g_iso);
    g_basis->excludes(g_iso);

    auto* assoc = app.add_subcommand("assoc", "Chronology part of the associator");
    assoc->add_option("--n", o.n)->required()->check(CLI::Range(1, 3));
    assoc->add_option("--rule", o.rule)->check(CLI::IsMember(rules));
    auto* a_phi = assoc->add_flag("--phi0", o.phi0, "print the phi0 table (default)");
    auto* a_coc = assoc->add_flag("--cocycle", o.cocycle, "cocycle defect and coboundary solve");
    auto* a_cmp = assoc->add_option("--compare", o.compare, "second rule")->check(CLI::IsMember(rules));
    a_phi->excludes(a_coc)->excludes(a_cmp);
    a_coc->excludes(a_cmp);

    auto* qb = app.add_subcommand("qbinom", "Quantum binomial coefficient");
    qb->add_option("--m", o.m)->required()->check(CLI::NonNegativeNumber);
    qb->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--n", o.n)->required()->check(CLI::Range(1, 8));
    std::vector<std::string> suites = suite_names();
    suites.insert(suites.begin(), "all");
    verify->add_option("--suite", o.suite)->check(CLI::IsMember(suites));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*bn) return run_bn(o);
        if (*mul) return run_mul(o);
        if (*center) return run_center(o);
        if (*springer) return run_springer(o);
        if (*assoc) return run_assoc(o);
        if (*qb) {
            std::cout << qbinom(o.m, o.k).str() << '\n';
            return kOk;
        }
        if (*verify) return run_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFailed;
    }
    return kBadInput;
}
