#include "oddarc/springer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace oddarc {

// ---------------------------------------------------------------- OPol

OddPolynomial OddPolynomial::constant(int nvars, const Int& c) {
    OddPolynomial p{nvars, {}};
    p.add({}, c);
    return p;
}

OddPolynomial OddPolynomial::variable(int nvars, int i) { return word(nvars, {i}); }

OddPolynomial OddPolynomial::word(int nvars, std::vector<int> w, const Int& c) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= nvars) throw std::invalid_argument("odd polynomial: variable out of range");
        for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    }
    std::sort(w.begin(), w.end());
    OddPolynomial p{nvars, {}};
    p.add(w, (inv & 1) ? Int(-c) : c);
    return p;
}

void OddPolynomial::add(const OddMonomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

OddPolynomial& OddPolynomial::operator+=(const OddPolynomial& o) {
    if (o.nvars != nvars) throw std::invalid_argument("odd polynomial: variable count mismatch");
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

OddPolynomial operator-(OddPolynomial a, const OddPolynomial& b) {
    for (const auto& [m, c] : b.terms) a.add(m, -c);
    return a;
}

OddPolynomial operator*(const OddPolynomial& a, const OddPolynomial& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("odd polynomial: variable count mismatch");
    OddPolynomial r = OddPolynomial::zero(a.nvars);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            r += OddPolynomial::word(a.nvars, std::move(w), ca * cb);
        }
    return r;
}

std::string format_monomial_x(const OddMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (int i : m) s += "x" + std::to_string(i + 1);
    return s;
}

std::string format_poly(const OddPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        Int a = abs(c);
        if (m.empty()) os << a;
        else {
            if (a != 1) os << a << '*';
            os << format_monomial_x(m);
        }
        first = false;
    }
    return os.str();
}

OddPolynomial parse_poly(int nvars, std::string_view text) {
    OddPolynomial out = OddPolynomial::zero(nvars);
    std::size_t i = 0;
    auto ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const char* msg) -> void {
        throw std::invalid_argument("parse error at offset " + std::to_string(i) + ": " + msg);
    };
    auto number = [&] {
        Int v = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected integer");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return v;
    };
    ws();
    if (i == text.size()) fail("empty polynomial");
    bool first = true;
    for (;;) {
        ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '-' || text[i] == '+') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Int coeff = 1;
        bool has_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = number();
            has_coeff = true;
            ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                ws();
            } else {
                out.add({}, sign * coeff);  // bare constant
                continue;
            }
        }
        std::vector<int> w;
        while (i < text.size() && text[i] == 'x') {
            ++i;
            Int v = number();
            if (v < 1 || v > nvars) fail("variable index out of range");
            w.push_back(static_cast<int>(v) - 1);
        }
        if (w.empty()) fail(has_coeff ? "expected monomial after '*'" : "expected term");
        out += OddPolynomial::word(nvars, w, sign * coeff);
    }
    return out;
}

// ---------------------------------------------------------------- epsilon generators

OddPolynomial epsilon_generator(int n, const std::vector<int>& I, int r) {
    const int k = static_cast<int>(I.size()) - n;
    if (k < 1 || k > n) throw std::invalid_argument("epsilon: |I| must be n+k with 1 <= k <= n");
    if (r < n - k + 1 || r > n + k) throw std::invalid_argument("epsilon: r out of range");
    for (std::size_t t = 0; t < I.size(); ++t)
        if (I[t] < 0 || I[t] >= 2 * n || (t > 0 && I[t] <= I[t - 1]))
            throw std::invalid_argument("epsilon: I must be strictly increasing within 1..2n");
    OddPolynomial out = OddPolynomial::zero(2 * n);
    const int s = static_cast<int>(I.size());
    // Subsets of positions of size r; position t in I carries the sign (-1)^t.
    std::vector<int> pos(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) pos[static_cast<std::size_t>(t)] = t;
    for (;;) {
        OddMonomial m;
        int neg = 0;
        for (int t : pos) {
            m.push_back(I[static_cast<std::size_t>(t)]);
            neg += t & 1;
        }
        out.add(m, (neg & 1) ? -1 : 1);
        int t = r - 1;
        while (t >= 0 && pos[static_cast<std::size_t>(t)] == s - r + t) --t;
        if (t < 0) break;
        ++pos[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < r; ++u) pos[static_cast<std::size_t>(u)] = pos[static_cast<std::size_t>(u - 1)] + 1;
    }
    return out;
}

namespace {

void subsets(int from, int size, std::vector<int>& cur, int total, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i < total; ++i) {
        cur.push_back(i);
        subsets(i + 1, size, cur, total, out);
        cur.pop_back();
    }
}

void monomials(int from, int deg, int nvars, OddMonomial& cur, std::vector<OddMonomial>& out) {
    if (deg == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i < nvars; ++i) {
        cur.push_back(i);
        monomials(i, deg - 1, nvars, cur, out);
        cur.pop_back();
    }
}

std::vector<OddMonomial> monomials_of_degree(int nvars, int d) {
    std::vector<OddMonomial> out;
    OddMonomial cur;
    monomials(0, d, nvars, cur, out);
    return out;
}

}  // namespace

std::vector<EpsilonIndex> epsilon_indices(int n) {
    std::vector<EpsilonIndex> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> Is;
        std::vector<int> cur;
        subsets(0, n + k, cur, 2 * n, Is);
        for (const auto& I : Is)
            for (int r = n - k + 1; r <= n + k; ++r) out.push_back({I, r});
    }
    return out;
}

// ---------------------------------------------------------------- quotient

int QuotientPresentation::total_rank() const {
    int s = 0;
    for (int r : ranks) s += r;
    return s;
}

std::vector<Int> QuotientPresentation::coordinates(const OddPolynomial& p, int d) const {
    if (d < 0) throw std::invalid_argument("coordinates: negative degree");
    if (d >= static_cast<int>(ambient.size())) return {};
    const auto& amb = ambient[static_cast<std::size_t>(d)];
    const IntMatrix& Rd = reduce[static_cast<std::size_t>(d)];
    std::vector<Int> y(Rd.cols());
    for (const auto& [m, c] : p.terms) {
        if (static_cast<int>(m.size()) != d) throw std::invalid_argument("coordinates: polynomial not homogeneous");
        auto it = std::lower_bound(amb.begin(), amb.end(), m);
        std::size_t row = static_cast<std::size_t>(it - amb.begin());
        for (std::size_t j = 0; j < Rd.cols(); ++j) y[j] += c * Rd(row, j);
    }
    return y;
}

OddPolynomial QuotientPresentation::reduced(const OddPolynomial& p) const {
    std::map<int, OddPolynomial> by_degree;
    for (const auto& [m, c] : p.terms) {
        auto& slot = by_degree.try_emplace(static_cast<int>(m.size()), OddPolynomial::zero(p.nvars)).first->second;
        slot.add(m, c);
    }
    OddPolynomial out = OddPolynomial::zero(p.nvars);
    for (const auto& [d, q] : by_degree) {
        if (d >= static_cast<int>(ambient.size())) continue;  // slices above n vanish in the quotient
        auto y = coordinates(q, d);
        for (std::size_t j = 0; j < y.size(); ++j) out.add(basis[static_cast<std::size_t>(d)][j], y[j]);
    }
    return out;
}

namespace {

std::vector<Int> to_vector(const OddPolynomial& p, const std::vector<OddMonomial>& amb) {
    std::vector<Int> v(amb.size());
    for (const auto& [m, c] : p.terms) {
        auto it = std::lower_bound(amb.begin(), amb.end(), m);
        if (it == amb.end() || *it != m) throw std::logic_error("springer: monomial outside ambient slice");
        v[static_cast<std::size_t>(it - amb.begin())] = c;
    }
    return v;
}

std::vector<Int> unit_vector(std::size_t n, std::size_t k) {
    std::vector<Int> v(n);
    v[k] = 1;
    return v;
}

}  // namespace

QuotientPresentation quotient_presentation(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("quotient_presentation: n out of range");
    const int nv = 2 * n;
    QuotientPresentation Q;
    Q.n = n;
    const auto eps = epsilon_indices(n);
    std::vector<OddPolynomial> gens;
    for (const auto& e : eps) gens.push_back(epsilon_generator(n, e.I, e.r));
    Q.ambient.resize(static_cast<std::size_t>(n + 2));
    Q.ideal.resize(Q.ambient.size());
    Q.ranks.resize(Q.ambient.size());
    Q.basis.resize(Q.ambient.size());
    Q.reduce.resize(Q.ambient.size());

    // Degree slices are independent.
#pragma omp parallel for schedule(dynamic)
    for (int d = 0; d <= n + 1; ++d) {
        const auto amb = monomials_of_degree(nv, d);
        const std::size_t N = amb.size();
        Lattice left(N), right(N);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const int r = eps[g].r;
            if (r > d) continue;
            for (const auto& m : monomials_of_degree(nv, d - r)) {
                OddPolynomial pm = OddPolynomial::word(nv, m);
                left.add(to_vector(pm * gens[g], amb));
                right.add(to_vector(gens[g] * pm, amb));
            }
        }
        IntMatrix L = left.basis();
        bool lr = L == right.basis();
        bool tf = true;
        for (const auto& s : smith_invariants(L)) tf = tf && s == 1;
        bool sq = true;
        if (d == 2)
            for (int i = 0; i < nv; ++i) sq = sq && left.contains(to_vector(OddPolynomial::word(nv, {i, i}), amb));

        // Greedy lexicographic basis: keep a monomial if it is independent modulo the ideal.
        Lattice acc = left;
        std::vector<OddMonomial> chosen;
        std::vector<std::size_t> chosen_idx;
        for (std::size_t k = 0; k < N && acc.rank() < N; ++k) {
            std::size_t before = acc.rank();
            acc.add(unit_vector(N, k));
            if (acc.rank() > before) {
                chosen.push_back(amb[k]);
                chosen_idx.push_back(k);
            }
        }
        IntMatrix B(N, N);
        for (std::size_t i = 0; i < L.rows(); ++i)
            for (std::size_t j = 0; j < N; ++j) B(i, j) = L(i, j);
        for (std::size_t t = 0; t < chosen_idx.size(); ++t) B(L.rows() + t, chosen_idx[t]) = 1;
        bool unimodular = acc.basis() == IntMatrix::identity(N);
        IntMatrix red(N, chosen.size());
        if (unimodular && N > 0) {
            auto inv = inverse_Q(B);
            if (!inv) throw std::logic_error("springer: basis matrix singular");
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t t = 0; t < chosen.size(); ++t) {
                    const Rational& q = (*inv)[i][L.rows() + t];
                    if (denominator(q) != 1) throw std::logic_error("springer: non-integral reduction");
                    red(i, t) = numerator(q);
                }
        }
        std::vector<BitRow> b2(N, BitRow(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) b2[i][j] = static_cast<std::uint8_t>(static_cast<int>(B(i, j) % 2 != 0));
        bool mod2 = rank_f2(b2) == N;

#pragma omp critical
        {
            const std::size_t sd = static_cast<std::size_t>(d);
            Q.ambient[sd] = amb;
            Q.ideal[sd] = L;
            Q.ranks[sd] = static_cast<int>(chosen.size());
            Q.basis[sd] = chosen;
            Q.reduce[sd] = red;
            Q.left_equals_right = Q.left_equals_right && lr;
            Q.torsion_free = Q.torsion_free && tf && unimodular;
            Q.squares_vanish = Q.squares_vanish && sq;
            Q.mod2_basis = Q.mod2_basis && mod2;
        }
    }
    return Q;
}

// ---------------------------------------------------------------- the map s

RingElement map_s(const OddPolynomial& p, int n) {
    if (p.nvars != 2 * n) throw std::invalid_argument("map_s: polynomial must have 2n variables");
    const ArcRing& R = ArcRing::get(n);
    RingElement out = RingElement::zero(n);
    for (const auto& [m, c] : p.terms)
        for (int a = 0; a < R.count(); ++a) {
            const CircleDiagram& d = R.diagram(a, a);
            Mask acc = 0;
            int sign = 1;
            bool zero = false;
            for (int i : m) {
                Mask bit = Mask{1} << d.circle_of[static_cast<std::size_t>(i)];
                if (acc & bit) {
                    zero = true;
                    break;
                }
                if (popcount(acc & ~((bit << 1) - 1)) & 1) sign = -sign;
                acc |= bit;
            }
            if (!zero) out.add({a, a, acc}, sign * c);
        }
    return out;
}

// ---------------------------------------------------------------- certificates

std::string IsoCertificate::str() const {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "ok" : "failed"; };
    os << "generators map to 0: " << flag(generators_vanish) << '\n'
       << "basis images independent: " << flag(injective) << '\n'
       << "graded ranks match: " << flag(ranks_match) << '\n'
       << "images span odd center: " << flag(spans_center) << '\n'
       << "structure constants match: " << flag(structure_match) << '\n'
       << "quotient ranks:";
    for (int r : quotient_ranks) os << ' ' << r;
    os << "\ncenter ranks:";
    for (int r : center_ranks) os << ' ' << r;
    os << '\n' << (pass ? "PASS" : "FAIL at " + failed_stage) << '\n';
    return os.str();
}

IsoCertificate verify_springer_iso(int n, const MultiplicationRule& rule) {
    if (n < 1 || n > 4) throw std::invalid_argument("verify_springer_iso: n out of range");
    IsoCertificate cert;
    const QuotientPresentation Q = quotient_presentation(n);
    const CenterBasis Z = odd_center(n, rule);
    auto stage = [&cert](bool ok, const char* name) {
        if (!ok && cert.failed_stage.empty()) cert.failed_stage = name;
        return ok;
    };

    bool vanish = true;
    for (const auto& e : epsilon_indices(n)) vanish = vanish && map_s(epsilon_generator(n, e.I, e.r), n).is_zero();
    cert.generators_vanish = stage(vanish, "generators");

    bool indep = true, spans = true;
    for (int d = 0; d <= n; ++d) {
        std::vector<RingElement> imgs;
        for (const auto& m : Q.basis[static_cast<std::size_t>(d)])
            imgs.push_back(map_s(OddPolynomial::word(2 * n, m), n));
        IntMatrix img = span_lattice(n, d, imgs);
        indep = indep && img.rows() == imgs.size();
        spans = spans && img == slice_lattice(Z, d);
    }
    cert.injective = stage(indep, "injectivity");

    cert.quotient_ranks.assign(Q.ranks.begin(), Q.ranks.begin() + n + 1);
    for (int d = 0; d <= n; ++d) cert.center_ranks.push_back(Z.graded_rank.at(d));
    cert.ranks_match = stage(cert.quotient_ranks == cert.center_ranks && Q.ranks[static_cast<std::size_t>(n + 1)] == 0,
                             "rank equality");
    cert.spans_center = stage(spans, "surjectivity");

    bool sc = true;
    for (int d1 = 0; d1 <= n && sc; ++d1)
        for (int d2 = 0; d2 <= n && sc; ++d2)
            for (const auto& u : Q.basis[static_cast<std::size_t>(d1)])
                for (const auto& v : Q.basis[static_cast<std::size_t>(d2)]) {
                    OddPolynomial pu = OddPolynomial::word(2 * n, u), pv = OddPolynomial::word(2 * n, v);
                    RingElement lhs = multiply(rule, map_s(pu, n), map_s(pv, n), Theory::Odd);
                    RingElement rhs = map_s(Q.reduced(pu * pv), n);
                    if (!(lhs == rhs)) {
                        sc = false;
                        break;
                    }
                }
    cert.structure_match = stage(sc, "structure constants");
    cert.pass = cert.failed_stage.empty();
    return cert;
}

RingElement even_generator(int n, int i) {
    if (i < 1 || i > 2 * n) throw std::invalid_argument("even_generator: index out of range");
    const ArcRing& R = ArcRing::get(n);
    RingElement x = RingElement::zero(n);
    for (int a = 0; a < R.count(); ++a)
        x.add({a, a, Mask{1} << R.diagram(a, a).circle_of[static_cast<std::size_t>(i - 1)]}, (i % 2) ? -1 : 1);
    return x;
}

std::string EvenPresentationCertificate::str() const {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "ok" : "failed"; };
    os << "X_i central: " << flag(central) << '\n'
       << "X_i^2 = 0: " << flag(squares_zero) << '\n'
       << "elementary sums vanish: " << flag(elementary_vanish) << '\n'
       << "monomials span Z(H^n): " << flag(spans_center) << " (rank " << span_rank << ")\n"
       << (pass ? "PASS" : "FAIL at " + failed_stage) << '\n';
    return os.str();
}

EvenPresentationCertificate even_presentation_check(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("even_presentation_check: n out of range");
    EvenPresentationCertificate cert;
    auto stage = [&cert](bool ok, const char* name) {
        if (!ok && cert.failed_stage.empty()) cert.failed_stage = name;
        return ok;
    };
    const ProductTable T = product_table(MultiplicationRule::standard(n), Theory::Even);
    const int P = 2 * n;
    std::vector<RingElement> X;
    for (int i = 1; i <= P; ++i) X.push_back(even_generator(n, i));

    bool central = true;
    for (const auto& xi : X)
        for (const auto& [m, deg] : ring_basis(n, Theory::Even)) {
            RingElement e = RingElement::monomial(n, m);
            central = central && multiply_with(T, xi, e) == multiply_with(T, e, xi);
        }
    cert.central = stage(central, "centrality");

    bool sq = true;
    for (const auto& xi : X) sq = sq && multiply_with(T, xi, xi).is_zero();
    cert.squares_zero = stage(sq, "squares");

    std::vector<RingElement> prod(std::size_t{1} << P, RingElement::zero(n));
    prod[0] = RingElement::unit(n);
    for (std::size_t s = 1; s < prod.size(); ++s) {
        int top = 31 - __builtin_clz(static_cast<unsigned>(s));
        prod[s] = multiply_with(T, prod[s & ~(std::size_t{1} << top)], X[static_cast<std::size_t>(top)]);
    }
    bool elem = true;
    for (int k = 1; k <= P; ++k) {
        RingElement sum = RingElement::zero(n);
        for (std::size_t s = 0; s < prod.size(); ++s)
            if (__builtin_popcount(static_cast<unsigned>(s)) == k) sum += prod[s];
        elem = elem && sum.is_zero();
    }
    cert.elementary_vanish = stage(elem, "elementary symmetric relations");

    const CenterBasis Z = even_center(n);
    bool spans = true;
    for (int p = 0; p <= P; ++p) {
        std::vector<RingElement> slice;
        for (std::size_t s = 0; s < prod.size(); ++s)
            if (__builtin_popcount(static_cast<unsigned>(s)) == p) slice.push_back(prod[s]);
        if (p > n) {
            for (const auto& e : slice) spans = spans && e.is_zero();
            continue;
        }
        IntMatrix L = span_lattice(n, p, slice);
        cert.span_rank += static_cast<int>(L.rows());
        spans = spans && L == slice_lattice(Z, p);
    }
    spans = spans && cert.span_rank == static_cast<int>(binomial(2 * n, n));
    cert.spans_center = stage(spans, "span");
    cert.pass = cert.failed_stage.empty();
    return cert;
}

}  // namespace oddarc
