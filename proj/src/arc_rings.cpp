#include "oddarc/arc_rings.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddarc {

// ---------------------------------------------------------------- ArcRing

ArcRing::ArcRing(int n) : n_(n), matchings_(enumerate_matchings(n)) {
    for (int i = 0; i < count(); ++i) index_.emplace(matchings_[static_cast<std::size_t>(i)].word(), i);
    diagrams_.reserve(static_cast<std::size_t>(count() * count()));
    for (int t = 0; t < count(); ++t)
        for (int b = 0; b < count(); ++b) diagrams_.push_back(closed_diagram(matching(t), matching(b)));
}

const ArcRing& ArcRing::get(int n) {
    constexpr int kCap = 8;
    static std::array<std::once_flag, kCap + 1> flags;
    static std::array<std::unique_ptr<ArcRing>, kCap + 1> rings;
    if (n < 1 || n > kCap) throw std::invalid_argument("arc ring: n out of range");
    std::call_once(flags[static_cast<std::size_t>(n)],
                   [n] { rings[static_cast<std::size_t>(n)].reset(new ArcRing(n)); });
    return *rings[static_cast<std::size_t>(n)];
}

int ArcRing::index_of(std::string_view word) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw std::invalid_argument("not a matching of B^" + std::to_string(n_) + ": " + std::string(word));
    return it->second;
}

// ---------------------------------------------------------------- elements

int exterior_degree(const BasisMonomial& m) { return popcount(m.colored); }

int monomial_degree(int n, const BasisMonomial& m) {
    return 2 * popcount(m.colored) - ArcRing::get(n).circles(m.top, m.bottom) + n;
}

RingElement RingElement::monomial(int n, const BasisMonomial& m, const Int& c) {
    RingElement r{n, {}};
    r.add(m, c);
    return r;
}

RingElement RingElement::unit(int n) {
    RingElement r{n, {}};
    for (int a = 0; a < ArcRing::get(n).count(); ++a) r.add({a, a, 0}, 1);
    return r;
}

void RingElement::add(const BasisMonomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& o) {
    if (o.n != n) throw std::invalid_argument("ring element: size mismatch");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    if (o.n != n) throw std::invalid_argument("ring element: size mismatch");
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

RingElement operator*(const Int& k, RingElement a) {
    if (k == 0) return RingElement::zero(a.n);
    for (auto& [m, c] : a.terms) c *= k;
    return a;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}
    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        ws();
        return i_ == s_.size();
    }
    char peek() {
        ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool eat(char ch) {
        if (peek() != ch) return false;
        ++i_;
        return true;
    }
    void expect(char ch) {
        if (!eat(ch)) fail(std::string("expected '") + ch + "'");
    }
    bool digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    Int uint() {
        if (!digit()) fail("expected integer");
        Int v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
        return v;
    }
    std::string_view until(char ch) {
        ws();
        std::size_t j = s_.find(ch, i_);
        if (j == std::string_view::npos) fail(std::string("missing '") + ch + "'");
        std::string_view out = s_.substr(i_, j - i_);
        i_ = j;
        return out;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(i_) + ": " + msg);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

RingElement parse_element(int n, std::string_view text) {
    const ArcRing& R = ArcRing::get(n);
    RingElement out = RingElement::zero(n);
    Cursor cur(text);
    if (cur.peek() == '0') {
        cur.uint();
        if (!cur.done()) cur.fail("trailing input after 0");
        return out;
    }
    bool first = true;
    while (first || !cur.done()) {
        int sign = 1;
        if (cur.eat('-')) sign = -1;
        else if (!cur.eat('+') && !first) cur.fail("expected '+' or '-'");
        first = false;
        Int coeff = 1;
        if (cur.digit()) {
            coeff = cur.uint();
            cur.expect('*');
        }
        cur.expect('[');
        std::string top(cur.until('|'));
        cur.expect('|');
        std::string bottom(cur.until('|'));
        cur.expect('|');
        cur.expect('{');
        BasisMonomial m{R.index_of(top), R.index_of(bottom), 0};
        const int circles = R.circles(m.top, m.bottom);
        if (!cur.eat('}')) {
            int prev = 0;
            do {
                Int v = cur.uint();
                if (v < 1 || v > circles) cur.fail("circle index out of range");
                int k = static_cast<int>(v);
                if (k <= prev) cur.fail("circle indices must be strictly increasing");
                prev = k;
                m.colored |= Mask{1} << (k - 1);
            } while (cur.eat(','));
            cur.expect('}');
        }
        cur.expect(']');
        out.add(m, sign * coeff);
    }
    return out;
}

std::string format_monomial(int n, const BasisMonomial& m) {
    const ArcRing& R = ArcRing::get(n);
    std::ostringstream os;
    os << '[' << R.matching(m.top).word() << '|' << R.matching(m.bottom).word() << "|{";
    bool first = true;
    for (Mask r = m.colored; r; r &= r - 1) {
        os << (first ? "" : ",") << (__builtin_ctz(r) + 1);
        first = false;
    }
    os << "}]";
    return os.str();
}

std::string format_element(const RingElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms) {
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        os << abs(c) << '*' << format_monomial(x.n, m);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- bridge topology

namespace {

struct Graph {
    int P;  // 2n points
    const Matching& c;
    const Matching& b;
    const Matching& a;
    std::vector<char> bridged;

    // Node ids: top row T_k = k, bottom row B_k = P + k.
    std::array<int, 2> neighbours(int v) const {
        if (v < P) {
            int k = v;
            return {c.partner(k), bridged[static_cast<std::size_t>(k)] ? P + k : b.partner(k)};
        }
        int k = v - P;
        return {P + a.partner(k), bridged[static_cast<std::size_t>(k)] ? k : P + b.partner(k)};
    }

    // Components labelled in scan order (T_1..T_2n then B_1..B_2n); returns the count.
    int components(std::vector<int>& comp, std::vector<int>& key) const {
        comp.assign(static_cast<std::size_t>(2 * P), -1);
        key.clear();
        int id = 0;
        for (int s = 0; s < 2 * P; ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0) continue;
            int best = 1 << 30;
            int prev = -1, cur = s;
            for (;;) {
                comp[static_cast<std::size_t>(cur)] = id;
                int bp = cur < P ? cur : cur - P;
                best = std::min(best, 2 * bp + (cur < P ? 0 : 1));
                auto nb = neighbours(cur);
                int next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                if (cur == s) break;
            }
            key.push_back(best);
            ++id;
        }
        return id;
    }
};

[[noreturn]] void inconsistent(const char* what) {
    throw std::logic_error(std::string("bridge procedure: ") + what);
}

}  // namespace

std::vector<BridgeStep> bridge_trace(int n, int c, int b, int a, const std::vector<int>& order) {
    const ArcRing& R = ArcRing::get(n);
    Graph g{2 * n, R.matching(c), R.matching(b), R.matching(a), std::vector<char>(static_cast<std::size_t>(2 * n), 0)};
    const int P = 2 * n;
    std::vector<int> comp, key, comp2, key2;
    int count = g.components(comp, key);
    if (count != R.circles(c, b) + R.circles(b, a)) inconsistent("initial component count");
    std::vector<BridgeStep> steps;
    for (int i : order) {
        BridgeStep s;
        s.point = i;
        s.partner = g.b.partner(i);
        s.before = count;
        if (g.bridged[static_cast<std::size_t>(i)]) {
            s.after = count;
            steps.push_back(s);
            continue;
        }
        const int j = s.partner;
        const int l1 = comp[static_cast<std::size_t>(i)], l2 = comp[static_cast<std::size_t>(P + i)];
        g.bridged[static_cast<std::size_t>(i)] = g.bridged[static_cast<std::size_t>(j)] = 1;
        const int count2 = g.components(comp2, key2);
        s.after = count2;
        if (l1 != l2) {
            if (count2 != count - 1) inconsistent("merge did not reduce the count");
            s.kind = StepKind::Merge;
            s.l1 = l1;
            s.l2 = l2;
            s.target = comp2[static_cast<std::size_t>(i)];
        } else {
            if (count2 != count + 1) inconsistent("split did not increase the count");
            s.kind = StepKind::Split;
            s.l1 = l1;
            s.pos_i = comp2[static_cast<std::size_t>(i)];
            s.pos_j = comp2[static_cast<std::size_t>(j)];
            s.key_i = key2[static_cast<std::size_t>(s.pos_i)];
            s.key_j = key2[static_cast<std::size_t>(s.pos_j)];
        }
        // Untouched components must keep their relative order.
        int last = -1;
        std::vector<char> seen(static_cast<std::size_t>(count), 0);
        for (int v = 0; v < 2 * P; ++v) {
            int o = comp[static_cast<std::size_t>(v)];
            if (o == l1 || o == l2 || seen[static_cast<std::size_t>(o)]) continue;
            seen[static_cast<std::size_t>(o)] = 1;
            int nw = comp2[static_cast<std::size_t>(v)];
            if (nw <= last) inconsistent("component order not preserved");
            last = nw;
        }
        comp.swap(comp2);
        key.swap(key2);
        count = count2;
        steps.push_back(s);
    }
    const CircleDiagram& out = R.diagram(c, a);
    if (count != out.size()) inconsistent("final component count");
    for (int k = 0; k < P; ++k)
        if (comp[static_cast<std::size_t>(k)] != out.circle_of[static_cast<std::size_t>(k)])
            inconsistent("final order differs from W(c)a order");
    return steps;
}

int split_count(const std::vector<BridgeStep>& steps) {
    int s = 0;
    for (const auto& st : steps) s += st.kind == StepKind::Split;
    return s;
}

// ---------------------------------------------------------------- multiplication

namespace {

std::vector<int> identity_order(int n) {
    std::vector<int> o(static_cast<std::size_t>(2 * n));
    std::iota(o.begin(), o.end(), 0);
    return o;
}

MoveWord product_word(const MultiplicationRule& rule, int c, int b, int a, Theory th) {
    const int n = rule.n();
    const TripleRule& tr = rule.at(c, b, a);
    MoveWord w;
    for (const BridgeStep& s : bridge_trace(n, c, b, a, th == Theory::Odd ? tr.order : identity_order(n))) {
        if (s.kind == StepKind::Merge) {
            w.push_back(ElementaryMove::merge(s.l1, s.l2, s.target));
        } else if (s.kind == StepKind::Split) {
            bool forward = tr.tail[static_cast<std::size_t>(s.point)] == s.point || th == Theory::Even;
            w.push_back(forward ? ElementaryMove::split(s.l1, s.pos_i, s.pos_j)
                                : ElementaryMove::split(s.l1, s.pos_j, s.pos_i));
        }
    }
    return w;
}

Terms run_word(const MoveWord& w, int m, Mask start, Theory th) {
    if (th == Theory::Odd) return apply_odd(w, ExteriorElement::monomial(m, start)).terms;
    return apply_even(w, EvenTensorElement::monomial(m, start)).terms;
}

void check_rule(const MultiplicationRule& rule, int n) {
    if (rule.n() != n) throw std::invalid_argument("multiply: rule size mismatch");
}

}  // namespace

Terms multiply_monomials(const MultiplicationRule& rule, int c, int b, int a, Mask x, Mask y, Theory th) {
    const ArcRing& R = ArcRing::get(rule.n());
    const int mt = R.circles(c, b), mb = R.circles(b, a);
    // Top circles come first in the scan, so x ∧ y is already in normal form.
    return run_word(product_word(rule, c, b, a, th), mt + mb, x | (y << mt), th);
}

namespace {

template <class F>
RingElement bilinear(int n, const RingElement& x, const RingElement& y, F&& mono) {
    if (x.n != n || y.n != n) throw std::invalid_argument("multiply: size mismatch");
    RingElement out = RingElement::zero(n);
    for (const auto& [mx, cx] : x.terms)
        for (const auto& [my, cy] : y.terms) {
            if (mx.bottom != my.top) continue;
            for (const auto& [k, c] : mono(mx.top, mx.bottom, my.bottom, mx.colored, my.colored))
                out.add({mx.top, my.bottom, k}, c * cx * cy);
        }
    return out;
}

}  // namespace

RingElement multiply(const MultiplicationRule& rule, const RingElement& x, const RingElement& y, Theory th) {
    check_rule(rule, x.n);
    return bilinear(x.n, x, y, [&](int c, int b, int a, Mask p, Mask q) {
        return multiply_monomials(rule, c, b, a, p, q, th);
    });
}

RingElement multiply_diagrammatic(const MultiplicationRule& rule, const RingElement& x, const RingElement& y) {
    check_rule(rule, x.n);
    return bilinear(x.n, x, y, [&](int c, int b, int a, Mask p, Mask q) {
        return multiply_monomials_diagrammatic(rule, c, b, a, p, q);
    });
}

std::vector<std::pair<BasisMonomial, int>> ring_basis(int n, Theory) {
    if (n < 1 || n > 5) throw std::invalid_argument("ring_basis: n out of range");
    const ArcRing& R = ArcRing::get(n);
    std::vector<std::pair<BasisMonomial, int>> out;
    for (int t = 0; t < R.count(); ++t)
        for (int b = 0; b < R.count(); ++b)
            for (Mask m = 0; m < (Mask{1} << R.circles(t, b)); ++m) {
                BasisMonomial bm{t, b, m};
                out.emplace_back(bm, monomial_degree(n, bm));
            }
    return out;
}

// ---------------------------------------------------------------- product tables

namespace {

std::vector<std::size_t> table_offsets(const ArcRing& R) {
    const int N = R.count();
    std::vector<std::size_t> off(static_cast<std::size_t>(N * N * N) + 1, 0);
    for (int c = 0; c < N; ++c)
        for (int b = 0; b < N; ++b)
            for (int a = 0; a < N; ++a) {
                std::size_t idx = static_cast<std::size_t>(R.triple_index(c, b, a));
                off[idx + 1] = off[idx] + (std::size_t{1} << (R.circles(c, b) + R.circles(b, a)));
            }
    return off;
}

void fill_triple(const MultiplicationRule& rule, Theory th, const ArcRing& R, int c, int b, int a,
                 std::vector<Terms>& cells, std::size_t base) {
    const int mt = R.circles(c, b), mb = R.circles(b, a);
    const MoveWord w = product_word(rule, c, b, a, th);
    for (Mask x = 0; x < (Mask{1} << mt); ++x)
        for (Mask y = 0; y < (Mask{1} << mb); ++y)
            cells[base + (static_cast<std::size_t>(x) << mb) + y] = run_word(w, mt + mb, x | (y << mt), th);
}

}  // namespace

const Terms& ProductTable::at(int c, int b, int a, Mask x, Mask y) const {
    const ArcRing& R = ArcRing::get(n_);
    const std::size_t base = offset_[static_cast<std::size_t>(R.triple_index(c, b, a))];
    return cells_[base + (static_cast<std::size_t>(x) << R.circles(b, a)) + y];
}

ProductTable product_table_serial(const MultiplicationRule& rule, Theory th) {
    const ArcRing& R = ArcRing::get(rule.n());
    ProductTable t;
    t.n_ = rule.n();
    t.offset_ = table_offsets(R);
    t.cells_.resize(t.offset_.back());
    const int N = R.count();
    for (int c = 0; c < N; ++c)
        for (int b = 0; b < N; ++b)
            for (int a = 0; a < N; ++a)
                fill_triple(rule, th, R, c, b, a, t.cells_, t.offset_[static_cast<std::size_t>(R.triple_index(c, b, a))]);
    return t;
}

ProductTable product_table(const MultiplicationRule& rule, Theory th) {
    const ArcRing& R = ArcRing::get(rule.n());
    ProductTable t;
    t.n_ = rule.n();
    t.offset_ = table_offsets(R);
    t.cells_.resize(t.offset_.back());
    const int N = R.count();
    const int triples = N * N * N;
    // Each triple writes a disjoint slice of cells_.
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < triples; ++idx) {
        const int c = idx / (N * N), b = (idx / N) % N, a = idx % N;
        fill_triple(rule, th, R, c, b, a, t.cells_, t.offset_[static_cast<std::size_t>(idx)]);
    }
    return t;
}

RingElement multiply_with(const ProductTable& t, const RingElement& x, const RingElement& y) {
    return bilinear(t.n(), x, y, [&](int c, int b, int a, Mask p, Mask q) -> const Terms& {
        return t.at(c, b, a, p, q);
    });
}

BasisMonomial embed_monomial(int m, int n, const BasisMonomial& x) {
    const ArcRing& Rm = ArcRing::get(m);
    const ArcRing& Rn = ArcRing::get(n);
    const int k = n - m;
    if (k < 0) throw std::invalid_argument("embed: target smaller than source");
    return {Rn.index_of(Rm.matching(x.top).padded(k).word()), Rn.index_of(Rm.matching(x.bottom).padded(k).word()),
            x.colored << k};
}

}  // namespace oddarc
