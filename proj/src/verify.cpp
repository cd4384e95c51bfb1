#include "oddarc/verify.hpp"

#include "oddarc/associator.hpp"
#include "oddarc/centers.hpp"
#include "oddarc/springer.hpp"

#include <sstream>
#include <stdexcept>

namespace oddarc {

bool SuiteReport::pass() const { return first_failure() == nullptr; }

const Check* SuiteReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

std::string SuiteReport::str() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << suite << '/' << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"catalan", "relations", "mod2", "centers", "iso", "cocycle"};
    return names;
}

int suite_max_n(const std::string& suite) {
    if (suite == "catalan") return 8;
    if (suite == "relations") return 8;  // independent of n
    if (suite == "mod2" || suite == "centers" || suite == "iso") return 4;
    if (suite == "cocycle") return 3;
    if (suite == "all") return 3;
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

namespace {

const char* const kRules[] = {"default", "ord"};

void add(SuiteReport& r, std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
}

// Runs a check body, turning exceptions into a failed check.
template <class F>
void guarded(SuiteReport& r, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        add(r, name, false, std::string("exception: ") + e.what());
    }
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> ranks_of(const CenterBasis& b) {
    std::vector<int> v;
    for (const auto& [p, k] : b.graded_rank) v.push_back(k);
    return v;
}

void suite_catalan(SuiteReport& r, int n) {
    const auto B = enumerate_matchings(n);
    std::vector<long long> cat{1};
    for (int m = 1; m <= n; ++m) {
        long long c = 0;
        for (int i = 0; i < m; ++i) c += cat[static_cast<std::size_t>(i)] * cat[static_cast<std::size_t>(m - 1 - i)];
        cat.push_back(c);
    }
    add(r, "count", static_cast<long long>(B.size()) == cat.back(),
        std::to_string(B.size()) + " matchings, Segner recursion gives " + std::to_string(cat.back()));
    long long s = 0;
    for (const auto& a : B) s += 1LL << lower_arc_count(a);
    add(r, "lower_arcs", s == binomial(2 * n, n),
        "sum 2^t(a) = " + std::to_string(s) + ", C(2n,n) = " + std::to_string(binomial(2 * n, n)));
    bool distinct = true;
    for (std::size_t i = 1; i < B.size(); ++i) distinct = distinct && B[i - 1] < B[i];
    add(r, "canonical_order", distinct, "strictly increasing words");
}

void suite_relations(SuiteReport& r, int) {
    for (Theory th : {Theory::Even, Theory::Odd}) {
        const char* tag = th == Theory::Even ? "even" : "odd";
        guarded(r, std::string("presentation_") + tag, [&] {
            RelationReport rep = verify_relations(4, th);
            std::string first;
            for (const auto& e : rep.entries)
                if (!e.pass && first.empty()) first = e.name + " " + e.detail;
            add(r, std::string("presentation_") + tag, rep.all_pass(),
                rep.all_pass() ? std::to_string(rep.entries.size()) + " relations" : first);
        });
    }
    std::string why;
    add(r, "degree_law", verify_degree_law(4, &why), why);
    why.clear();
    add(r, "mod2_moves", verify_mod2_moves(4, &why), why);
}

void suite_mod2(SuiteReport& r, int n) {
    const ArcRing& R = ArcRing::get(n);
    const auto basis = ring_basis(n, Theory::Odd);
    long pairs = 0, bad_oracle = 0, bad_mod2 = 0;
    const MultiplicationRule std_rule = MultiplicationRule::standard(n);
    for (const char* rn : kRules) {
        const MultiplicationRule rule = MultiplicationRule::by_name(n, rn);
        for (const auto& [x, dx] : basis)
            for (const auto& [y, dy] : basis) {
                if (x.bottom != y.top) continue;
                ++pairs;
                Terms odd = multiply_monomials(rule, x.top, x.bottom, y.bottom, x.colored, y.colored, Theory::Odd);
                Terms dia = multiply_monomials_diagrammatic(rule, x.top, x.bottom, y.bottom, x.colored, y.colored);
                if (odd != dia) ++bad_oracle;
                if (rule.name() != "default") continue;
                Terms even = multiply_monomials(rule, x.top, x.bottom, y.bottom, x.colored, y.colored, Theory::Even);
                Terms diff = even;
                for (const auto& [m, v] : odd) diff[m] -= v;
                for (const auto& [m, v] : diff)
                    if (v % 2 != 0) {
                        ++bad_mod2;
                        break;
                    }
            }
    }
    add(r, "oracle", bad_oracle == 0,
        std::to_string(pairs) + " products over both rules, " + std::to_string(bad_oracle) + " mismatches");
    add(r, "odd_even_mod2", bad_mod2 == 0, std::to_string(bad_mod2) + " incongruent products");

    guarded(r, "sign_only_rule_dependence", [&] {
        SignTable g = rule_ratio_table(std_rule, MultiplicationRule::ordered(n));
        std::size_t neg = 0;
        for (auto b : g.bits) neg += b;
        add(r, "sign_only_rule_dependence", true,
            std::to_string(neg) + " triples with ratio -1, " + std::to_string(g.undefined_count()) +
                " blocks where the map vanishes");
    });

    bool unit = true;
    const RingElement one = RingElement::unit(n);
    for (const auto& [x, dx] : basis) {
        RingElement e = RingElement::monomial(n, x);
        unit = unit && multiply(std_rule, one, e, Theory::Odd) == e && multiply(std_rule, e, one, Theory::Odd) == e;
    }
    add(r, "unit", unit, "sum of 1_a is a two-sided unit");

    if (n == 2) {
        const int a = R.index_of("(())"), b = R.index_of("()()");
        for (const char* rn : kRules) {
            const MultiplicationRule rule = MultiplicationRule::by_name(n, rn);
            RingElement g = RingElement::monomial(n, {a, a, 1}), u = RingElement::monomial(n, {a, b, 0}),
                        v = RingElement::monomial(n, {b, a, 0});
            RingElement lhs = multiply(rule, multiply(rule, g, u, Theory::Odd), v, Theory::Odd);
            RingElement rhs = multiply(rule, g, multiply(rule, u, v, Theory::Odd), Theory::Odd);
            add(r, std::string("nonassociative_") + rn, !lhs.is_zero() && lhs == Int(-1) * rhs,
                "(gu)v = " + format_element(lhs) + ", g(uv) = " + format_element(rhs));
        }
    }
}

void suite_centers(SuiteReport& r, int n) {
    const MultiplicationRule C = MultiplicationRule::standard(n), O = MultiplicationRule::ordered(n);
    const CenterBasis oz = odd_center(n, C), oz_ord = odd_center(n, O), ring = ring_center(n, C), even = even_center(n);
    const int expect = static_cast<int>(binomial(2 * n, n));
    add(r, "odd_center_rank", oz.rank() == expect, "graded " + join(ranks_of(oz)) + ", total " + std::to_string(oz.rank()));
    add(r, "even_center_rank", even.rank() == expect && ranks_of(even) == ranks_of(oz),
        "graded " + join(ranks_of(even)));
    add(r, "ring_center_rank", true, "graded " + join(ranks_of(ring)));

    bool same = true;
    for (int p = 0; p <= n; ++p) same = same && slice_lattice(oz, p) == slice_lattice(oz_ord, p);
    add(r, "rule_independence", same, "OZ lattices under default and ord");

    bool inside = true;
    for (const auto& z : ring.generators) inside = inside && center_coordinates(oz, z).has_value();
    add(r, "ring_center_inside_odd_center", inside);

    const ArcRing& R = ArcRing::get(n);
    bool degree_ok = true;
    for (std::size_t i = 0; i < ring.generators.size(); ++i) {
        if (ring.degrees[i] % 2 == 0) continue;
        for (const auto& [m, c] : ring.generators[i].terms)
            degree_ok = degree_ok && popcount(m.colored) == R.circles(m.top, m.bottom);
    }
    add(r, "ring_center_degrees", degree_ok, "odd-degree generators are top-degree in every block");

    if (n <= 3) {
        const ProductTable T = product_table(C, Theory::Odd);
        bool member = true;
        for (std::size_t i = 0; i < oz.generators.size() && member; ++i)
            for (const auto& [x, dx] : ring_basis(n, Theory::Odd)) {
                RingElement e = RingElement::monomial(n, x);
                const int s = (oz.degrees[i] * popcount(x.colored)) % 2 ? -1 : 1;
                if (!(multiply_with(T, oz.generators[i], e) == Int(s) * multiply_with(T, e, oz.generators[i]))) {
                    member = false;
                    break;
                }
            }
        add(r, "supercommutes_with_basis", member, "zx = (-1)^{p(x)p(z)} xz for every generator and basis monomial");
        guarded(r, "structure", [&] {
            CenterStructure cs = center_structure_constants(oz, C);
            add(r, "structure", cs.associative && cs.supercommutative,
                std::string("closed, associative ") + (cs.associative ? "yes" : "no") + ", supercommutative " +
                    (cs.supercommutative ? "yes" : "no"));
        });
    }
}

void suite_iso(SuiteReport& r, int n) {
    const QuotientPresentation Q = quotient_presentation(n);
    add(r, "quotient_rank", Q.total_rank() == binomial(2 * n, n) && Q.ranks.back() == 0,
        "graded " + join(Q.ranks) + ", total " + std::to_string(Q.total_rank()));
    add(r, "torsion_free", Q.torsion_free);
    add(r, "left_equals_right_ideal", Q.left_equals_right);
    add(r, "squares_vanish", Q.squares_vanish);
    add(r, "mod2_basis", Q.mod2_basis);
    for (const char* rn : kRules) {
        IsoCertificate cert = verify_springer_iso(n, MultiplicationRule::by_name(n, rn));
        add(r, std::string("springer_iso_") + rn, cert.pass,
            cert.pass ? "ranks " + join(cert.quotient_ranks) : "failed at " + cert.failed_stage);
    }
    if (n <= 3) {
        EvenPresentationCertificate e = even_presentation_check(n);
        add(r, "even_presentation", e.pass,
            e.pass ? "span rank " + std::to_string(e.span_rank) : "failed at " + e.failed_stage);
    }
}

void suite_cocycle(SuiteReport& r, int n) {
    const ArcRing& R = ArcRing::get(n);
    const int N = R.count();
    bool scis = true, law = true;
    for (const char* rn : kRules) {
        const MultiplicationRule rule = MultiplicationRule::by_name(n, rn);
        for (int c = 0; c < N; ++c)
            for (int b = 0; b < N; ++b)
                for (int a = 0; a < N; ++a) {
                    const int S = scission_count(n, c, b, a);
                    scis = scis && S == split_count(bridge_trace(n, c, b, a, rule.at(c, b, a).order));
                    for (Mask x = 0; x < (Mask{1} << R.circles(c, b)); ++x)
                        for (Mask y = 0; y < (Mask{1} << R.circles(b, a)); ++y)
                            for (const auto& [m, v] : multiply_monomials(rule, c, b, a, x, y, Theory::Odd))
                                law = law && popcount(m) == popcount(x) + popcount(y) + S;
                }
    }
    add(r, "scission_formula", scis, "S(c,b,a) equals the split count of the bridge trace");
    add(r, "exterior_degree_law", law, "p(xy) = p(x) + p(y) + S");

    for (const char* rn : kRules) {
        const MultiplicationRule rule = MultiplicationRule::by_name(n, rn);
        const SignTable phi = phi0_table(rule);
        std::size_t neg = 0;
        for (auto b : phi.bits) neg += b;
        const std::string tag = rn;
        add(r, "phi0_" + tag, true,
            std::to_string(neg) + " of " + std::to_string(phi.bits.size()) + " quadruples give -1, " +
                std::to_string(phi.undefined_count()) + " undefined (both composites vanish)");
        CocycleReport cr = cocycle_defect(phi);
        std::string detail = std::to_string(cr.checked) + " quintuples with all faces defined, " +
                             std::to_string(cr.defects.size()) + " defects";
        add(r, "phi0_cocycle_" + tag, cr.pass, detail);
        add(r, "phi0_pentagon_" + tag, cr.defects_are_scission_cup,
            "d(phi0) = S(e,d,c)S(c,b,a) on all " + std::to_string(cr.checked) + " checked quintuples");
        auto lam = solve_coboundary(phi);
        add(r, "lambda0_" + tag, lam.has_value(), lam ? "d(lambda0) = phi0 re-checked" : "no solution");
        if (n <= 2) {
            guarded(r, "associator_identity_" + tag, [&] {
                long k = verify_associator_identity(rule, phi);
                add(r, "associator_identity_" + tag, true, std::to_string(k) + " nonzero triples");
            });
        }
    }
    if (n == 2) {
        guarded(r, "same_associator_isomorphism", [&] {
            auto w = find_same_associator_rule(n);
            add(r, "same_associator_isomorphism", w.has_value(),
                w ? std::to_string(w->flipped.size()) + " orientation flips, isomorphism verified" : "none found");
        });
    }
}

}  // namespace

SuiteReport run_suite(const std::string& suite, int n) {
    const int max_n = suite_max_n(suite);
    if (n < 1 || n > max_n)
        throw std::invalid_argument("suite '" + suite + "' supports 1 <= n <= " + std::to_string(max_n));
    SuiteReport r;
    r.suite = suite;
    r.n = n;
    if (suite == "all") {
        for (const auto& s : suite_names()) {
            SuiteReport sub = run_suite(s, n);
            for (auto& c : sub.checks) r.checks.push_back({s + "/" + c.name, c.pass, c.detail});
        }
        return r;
    }
    if (suite == "catalan") suite_catalan(r, n);
    else if (suite == "relations") suite_relations(r, n);
    else if (suite == "mod2") suite_mod2(r, n);
    else if (suite == "centers") suite_centers(r, n);
    else if (suite == "iso") suite_iso(r, n);
    else suite_cocycle(r, n);
    return r;
}

}  // namespace oddarc
