#include "oddarc/associator.hpp"

#include <exception>
#include <map>
#include <tuple>
#include <sstream>
#include <stdexcept>

namespace oddarc {

// ---------------------------------------------------------------- sign tables

SignTable SignTable::zero(int n, int arity) {
    SignTable t;
    t.n = n;
    t.arity = arity;
    t.count = ArcRing::get(n).count();
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) size *= static_cast<std::size_t>(t.count);
    t.bits.assign(size, 0);
    t.defined.assign(size, 1);
    return t;
}

std::size_t SignTable::index(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != arity) throw std::invalid_argument("sign table: wrong tuple length");
    std::size_t idx = 0;
    for (int v : t) {
        if (v < 0 || v >= count) throw std::invalid_argument("sign table: matching index out of range");
        idx = idx * static_cast<std::size_t>(count) + static_cast<std::size_t>(v);
    }
    return idx;
}

std::vector<int> SignTable::tuple(std::size_t idx) const {
    std::vector<int> t(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(count));
        idx /= static_cast<std::size_t>(count);
    }
    return t;
}

std::size_t SignTable::undefined_count() const {
    std::size_t k = 0;
    for (auto d : defined) k += d == 0;
    return k;
}

bool SignTable::is_zero() const {
    for (auto b : bits)
        if (b) return false;
    return true;
}

std::string SignTable::str() const {
    const ArcRing& R = ArcRing::get(n);
    std::ostringstream os;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        auto t = tuple(i);
        for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "|" : "") << R.matching(t[k]).word();
        os << " -> " << (!defined[i] ? "undefined" : bits[i] ? "-1" : "+1") << '\n';
    }
    return os.str();
}

SignTable parse_sign_table(int n, int arity, std::string_view text) {
    const ArcRing& R = ArcRing::get(n);
    SignTable t = SignTable::zero(n, arity);
    std::vector<std::uint8_t> seen(t.bits.size(), 0);
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("sign table line " + std::to_string(lineno) + ": " + msg);
        };
        auto arrow = line.find("->");
        if (arrow == std::string::npos) fail("missing '->'");
        std::string lhs = line.substr(0, arrow), rhs = line.substr(arrow + 2);
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        rhs = trim(rhs);
        if (rhs != "+1" && rhs != "-1" && rhs != "1" && rhs != "undefined") fail("value must be +1, -1 or undefined");
        std::vector<int> tup;
        std::istringstream ws(trim(lhs));
        std::string w;
        while (std::getline(ws, w, '|')) {
            try {
                tup.push_back(R.index_of(trim(w)));
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        if (static_cast<int>(tup.size()) != arity) fail("wrong number of matchings");
        std::size_t idx = t.index(tup);
        if (seen[idx]) fail("duplicate entry");
        seen[idx] = 1;
        t.bits[idx] = rhs == "-1";
        t.defined[idx] = rhs != "undefined";
    }
    for (auto s : seen)
        if (!s) throw std::invalid_argument("sign table: not total");
    return t;
}

// ---------------------------------------------------------------- scissions and phi0

int scission_count(int n, int c, int b, int a) {
    const ArcRing& R = ArcRing::get(n);
    const int twice = distance(R.matching(c), R.matching(b)) + distance(R.matching(b), R.matching(a)) -
                      distance(R.matching(c), R.matching(a));
    if (twice < 0 || twice % 2) throw std::logic_error("scission count is not a nonnegative integer");
    return twice / 2;
}

namespace {

void accumulate(Terms& acc, Mask m, const Int& v) {
    if (v == 0) return;
    auto [it, fresh] = acc.try_emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) acc.erase(it);
    }
}

// Sum over the terms of `inner` of their product with a fixed monomial.
template <class F>
Terms extend(const Terms& inner, const F& f) {
    Terms out;
    for (const auto& [m, v] : inner)
        for (const auto& [u, w] : f(m)) accumulate(out, u, v * w);
    return out;
}

// Both composites agree up to one global sign once phi1 is stripped; returns that sign.
template <class Mul>
int block_phi0(const Mul& mul, const ArcRing& R, int d, int c, int b, int a) {
    const int S = scission_count(R.n(), c, b, a);
    const Mask nx = Mask{1} << R.circles(d, c), ny = Mask{1} << R.circles(c, b), nz = Mask{1} << R.circles(b, a);
    int ratio = 0;
    for (Mask x = 0; x < nx; ++x)
        for (Mask y = 0; y < ny; ++y)
            for (Mask z = 0; z < nz; ++z) {
                Terms lhs = extend(mul(d, c, b, x, y), [&](Mask w) -> const Terms& { return mul(d, b, a, w, z); });
                Terms rhs = extend(mul(c, b, a, y, z), [&](Mask w) -> const Terms& { return mul(d, c, a, x, w); });
                if ((popcount(x) * S) & 1)
                    for (auto& [m, v] : rhs) v = -v;
                if (lhs.empty() != rhs.empty()) throw std::logic_error("phi0: composites have different supports");
                if (lhs.empty()) continue;
                if (ratio == 0) ratio = lhs.begin()->second == rhs.begin()->second ? 1 : -1;
                if (ratio == -1)
                    for (auto& [m, v] : rhs) v = -v;
                if (lhs != rhs) throw std::logic_error("phi0: composites are not proportional");
            }
    if (ratio == 0) throw std::domain_error("phi0: both composite maps vanish, sign undefined");
    return ratio;
}

}  // namespace

int phi0(const MultiplicationRule& rule, int d, int c, int b, int a) {
    const ArcRing& R = ArcRing::get(rule.n());
    // Local cache keeps references valid inside extend().
    std::map<std::tuple<int, int, int, Mask, Mask>, Terms> cache;
    auto mul = [&](int p, int q, int r, Mask x, Mask y) -> const Terms& {
        auto key = std::make_tuple(p, q, r, x, y);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, multiply_monomials(rule, p, q, r, x, y, Theory::Odd)).first;
        return it->second;
    };
    return block_phi0(mul, R, d, c, b, a);
}

int phi0(const ProductTable& table, int d, int c, int b, int a) {
    auto mul = [&](int p, int q, int r, Mask x, Mask y) -> const Terms& { return table.at(p, q, r, x, y); };
    return block_phi0(mul, ArcRing::get(table.n()), d, c, b, a);
}

SignTable phi0_table_serial(const MultiplicationRule& rule) {
    const ProductTable T = product_table_serial(rule, Theory::Odd);
    SignTable t = SignTable::zero(rule.n(), 4);
    for (std::size_t i = 0; i < t.bits.size(); ++i) {
        auto q = t.tuple(i);
        try {
            t.bits[i] = phi0(T, q[0], q[1], q[2], q[3]) < 0;
        } catch (const std::domain_error&) {
            t.defined[i] = 0;
        }
    }
    return t;
}

SignTable phi0_table(const MultiplicationRule& rule) {
    const ProductTable T = product_table(rule, Theory::Odd);
    SignTable t = SignTable::zero(rule.n(), 4);
    std::exception_ptr err;
    const long size = static_cast<long>(t.bits.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < size; ++i) {
        try {
            auto q = t.tuple(static_cast<std::size_t>(i));
            t.bits[static_cast<std::size_t>(i)] = phi0(T, q[0], q[1], q[2], q[3]) < 0;
        } catch (const std::domain_error&) {
            t.defined[static_cast<std::size_t>(i)] = 0;
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return t;
}

// ---------------------------------------------------------------- cochains

SignTable coboundary(const SignTable& t) {
    SignTable out = SignTable::zero(t.n, t.arity + 1);
    for (std::size_t i = 0; i < out.bits.size(); ++i) {
        auto full = out.tuple(i);
        std::uint8_t s = 0, all = 1;
        for (std::size_t k = 0; k < full.size(); ++k) {
            auto face = full;
            face.erase(face.begin() + static_cast<long>(k));
            s ^= t.get(face);
            all &= t.defined[t.index(face)];
        }
        out.bits[i] = all ? s : 0;
        out.defined[i] = all;
    }
    return out;
}

CocycleReport cocycle_defect(const SignTable& phi) {
    if (phi.arity != 4) throw std::invalid_argument("cocycle_defect: expected a table on quadruples");
    CocycleReport r;
    SignTable d = coboundary(phi);
    r.checked = d.bits.size() - d.undefined_count();
    for (std::size_t i = 0; i < d.bits.size(); ++i)
        if (d.bits[i]) {
            auto t = d.tuple(i);
            r.defects.push_back({t[0], t[1], t[2], t[3], t[4]});
        }
    r.pass = r.defects.empty();
    const SignTable cup = scission_cup(phi.n);
    for (std::size_t i = 0; i < d.bits.size(); ++i)
        if (d.defined[i] && d.bits[i] != cup.bits[i]) r.defects_are_scission_cup = false;
    return r;
}

SignTable scission_cup(int n) {
    SignTable t = SignTable::zero(n, 5);
    for (std::size_t i = 0; i < t.bits.size(); ++i) {
        auto q = t.tuple(i);
        t.bits[i] = static_cast<std::uint8_t>((scission_count(n, q[0], q[1], q[2]) * scission_count(n, q[2], q[3], q[4])) & 1);
    }
    return t;
}

std::optional<SignTable> solve_coboundary(const SignTable& target) {
    if (target.arity < 2) throw std::invalid_argument("solve_coboundary: arity too small");
    SignTable unknown = SignTable::zero(target.n, target.arity - 1);
    std::vector<BitRow> A;
    BitRow rhs;
    for (std::size_t i = 0; i < target.bits.size(); ++i) {
        if (!target.defined[i]) continue;
        auto full = target.tuple(i);
        BitRow row(unknown.bits.size(), 0);
        for (std::size_t k = 0; k < full.size(); ++k) {
            auto face = full;
            face.erase(face.begin() + static_cast<long>(k));
            row[unknown.index(face)] ^= 1;
        }
        A.push_back(std::move(row));
        rhs.push_back(target.bits[i]);
    }
    if (A.empty()) return unknown;
    auto x = solve_f2(A, rhs);
    if (!x) return std::nullopt;
    unknown.bits = *x;
    const SignTable check = coboundary(unknown);
    for (std::size_t i = 0; i < target.bits.size(); ++i)
        if (target.defined[i] && check.bits[i] != target.bits[i])
            throw std::logic_error("solve_coboundary: solution fails re-check");
    return unknown;
}

// ---------------------------------------------------------------- rule comparison

namespace {

template <class MulA, class MulB>
int block_ratio(const MulA& ma, const MulB& mb, const ArcRing& R, int c, int b, int a) {
    int ratio = 0;
    for (Mask x = 0; x < (Mask{1} << R.circles(c, b)); ++x)
        for (Mask y = 0; y < (Mask{1} << R.circles(b, a)); ++y) {
            Terms p = ma(x, y), q = mb(x, y);
            if (p.empty() != q.empty()) throw std::logic_error("rule ratio: products have different supports");
            if (p.empty()) continue;
            if (ratio == 0) ratio = p.begin()->second == q.begin()->second ? 1 : -1;
            if (ratio == -1)
                for (auto& [m, v] : q) v = -v;
            if (p != q) throw std::logic_error("rule ratio: block maps are not proportional");
        }
    if (ratio == 0) throw std::domain_error("rule ratio: block map vanishes");
    return ratio;
}

void require_same_n(const MultiplicationRule& C, const MultiplicationRule& Cp) {
    if (C.n() != Cp.n()) throw std::invalid_argument("rules have different n");
}

}  // namespace

int rule_sign_ratio(const MultiplicationRule& C, const MultiplicationRule& Cp, int c, int b, int a) {
    require_same_n(C, Cp);
    auto ma = [&](Mask x, Mask y) { return multiply_monomials(C, c, b, a, x, y, Theory::Odd); };
    auto mb = [&](Mask x, Mask y) { return multiply_monomials(Cp, c, b, a, x, y, Theory::Odd); };
    return block_ratio(ma, mb, ArcRing::get(C.n()), c, b, a);
}

SignTable rule_ratio_table(const MultiplicationRule& C, const MultiplicationRule& Cp) {
    require_same_n(C, Cp);
    const ProductTable T = product_table(C, Theory::Odd), Tp = product_table(Cp, Theory::Odd);
    const ArcRing& R = ArcRing::get(C.n());
    SignTable eta = SignTable::zero(C.n(), 3);
    for (std::size_t i = 0; i < eta.bits.size(); ++i) {
        auto t = eta.tuple(i);
        auto ma = [&](Mask x, Mask y) { return T.at(t[0], t[1], t[2], x, y); };
        auto mb = [&](Mask x, Mask y) { return Tp.at(t[0], t[1], t[2], x, y); };
        try {
            eta.bits[i] = block_ratio(ma, mb, R, t[0], t[1], t[2]) < 0;
        } catch (const std::domain_error&) {
            eta.defined[i] = 0;  // the block map vanishes for both rules
        }
    }
    return eta;
}

std::string RuleIsomorphism::str() const {
    std::ostringstream os;
    if (!same_associator) {
        os << "associators differ";
        if (first_difference) {
            const auto& q = *first_difference;
            os << " at quadruple " << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3];
        }
        os << '\n';
        return os.str();
    }
    os << "same associator\n";
    if (hole_obstruction) os << "sign ratio is not a cocycle on cells where phi0 is undefined; no sign twist\n";
    if (epsilon) os << "epsilon:\n" << epsilon->str();
    os << "isomorphism " << (verified ? "verified" : "NOT verified") << '\n';
    return os.str();
}

RuleIsomorphism build_rule_isomorphism(const MultiplicationRule& C, const MultiplicationRule& Cp) {
    require_same_n(C, Cp);
    RuleIsomorphism iso;
    const SignTable phi = phi0_table(C), phip = phi0_table(Cp);
    for (std::size_t i = 0; i < phi.bits.size(); ++i)
        if (phi.bits[i] != phip.bits[i] || phi.defined[i] != phip.defined[i]) {
            auto q = phi.tuple(i);
            iso.first_difference = std::array<int, 4>{q[0], q[1], q[2], q[3]};
            return iso;
        }
    iso.same_associator = true;
    const SignTable eta = rule_ratio_table(C, Cp);
    // phi0(C) = phi0(C') + d(eta) wherever phi0 is defined.
    const SignTable deta = coboundary(eta);
    for (std::size_t i = 0; i < deta.bits.size(); ++i) {
        if (!deta.defined[i] || !deta.bits[i]) continue;
        if (phi.defined[i]) throw std::logic_error("rule ratio is not a 2-cocycle despite equal associators");
        iso.hole_obstruction = true;  // d(eta) lives on an undefined cell: no sign twist exists
    }
    if (iso.hole_obstruction) return iso;
    iso.epsilon = solve_coboundary(eta);
    if (!iso.epsilon) throw std::logic_error("rule ratio is a cocycle but not a coboundary");

    const ProductTable T = product_table(C, Theory::Odd), Tp = product_table(Cp, Theory::Odd);
    const ArcRing& R = ArcRing::get(C.n());
    const SignTable& eps = *iso.epsilon;
    bool ok = true;
    for (int c = 0; c < R.count() && ok; ++c)
        for (int b = 0; b < R.count() && ok; ++b)
            for (int a = 0; a < R.count() && ok; ++a) {
                // theta(x y) = theta(x) theta(y), theta = (-1)^eps on each block
                const bool flip = (eps.get({c, a}) ^ eps.get({c, b}) ^ eps.get({b, a})) != 0;
                for (Mask x = 0; x < (Mask{1} << R.circles(c, b)) && ok; ++x)
                    for (Mask y = 0; y < (Mask{1} << R.circles(b, a)); ++y) {
                        Terms p = T.at(c, b, a, x, y);
                        if (flip)
                            for (auto& [m, v] : p) v = -v;
                        if (p != Tp.at(c, b, a, x, y)) {
                            ok = false;
                            break;
                        }
                    }
            }
    iso.verified = ok;
    return iso;
}

std::optional<SameAssociatorWitness> find_same_associator_rule(int n) {
    const MultiplicationRule base = MultiplicationRule::standard(n);
    const SignTable phi = phi0_table(base);
    const ArcRing& R = ArcRing::get(n);
    std::vector<std::array<int, 3>> cand;
    for (int c = 0; c < R.count(); ++c)
        for (int b = 0; b < R.count(); ++b)
            for (int a = 0; a < R.count(); ++a)
                if (scission_count(n, c, b, a) > 0) cand.push_back({c, b, a});

    auto attempt = [&](const std::vector<std::array<int, 3>>& flips) -> std::optional<SameAssociatorWitness> {
        MultiplicationRule r = base;
        for (const auto& t : flips) r.flip(t[0], t[1], t[2]);
        if (!(phi0_table(r) == phi)) return std::nullopt;
        RuleIsomorphism iso = build_rule_isomorphism(base, r);
        if (!iso.verified || !iso.epsilon || iso.epsilon->is_zero()) return std::nullopt;
        return SameAssociatorWitness{r, flips, iso};
    };
    for (const auto& t : cand)
        if (auto w = attempt({t})) return w;
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (auto w = attempt({cand[i], cand[j]})) return w;
    return std::nullopt;
}

long verify_associator_identity(const MultiplicationRule& rule, const SignTable& phi) {
    const ProductTable T = product_table(rule, Theory::Odd);
    const ArcRing& R = ArcRing::get(rule.n());
    const int N = R.count();
    long checked = 0;
    for (int d = 0; d < N; ++d)
        for (int c = 0; c < N; ++c)
            for (int b = 0; b < N; ++b)
                for (int a = 0; a < N; ++a) {
                    const int S = scission_count(rule.n(), c, b, a);
                    if (!phi.is_defined({d, c, b, a})) continue;  // both composites vanish on the block
                    const int s0 = phi.sign({d, c, b, a});
                    for (Mask x = 0; x < (Mask{1} << R.circles(d, c)); ++x)
                        for (Mask y = 0; y < (Mask{1} << R.circles(c, b)); ++y)
                            for (Mask z = 0; z < (Mask{1} << R.circles(b, a)); ++z) {
                                Terms lhs = extend(T.at(d, c, b, x, y), [&](Mask w) -> const Terms& { return T.at(d, b, a, w, z); });
                                Terms rhs = extend(T.at(c, b, a, y, z), [&](Mask w) -> const Terms& { return T.at(d, c, a, x, w); });
                                if (lhs.empty() || rhs.empty()) continue;
                                const int sign = s0 * (((popcount(x) * S) & 1) ? -1 : 1);
                                if (sign < 0)
                                    for (auto& [m, v] : rhs) v = -v;
                                if (lhs != rhs) throw std::logic_error("associator identity fails");
                                ++checked;
                            }
                }
    return checked;
}

}  // namespace oddarc
