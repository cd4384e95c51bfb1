// Second, independent multiplication: colored diagrams resolved bridge by bridge with the
// explicit sign tables (merge: beta_x / beta_y; split: alpha, beta_i, beta_j, beta).
// Shares no code with the exterior simulation beyond the rule and the matchings.

#include "oddarc/arc_rings.hpp"

#include <algorithm>
#include <numeric>

namespace oddarc {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) p[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
    }
};

// Component index of every node, components numbered by their smallest node id.
std::vector<int> label_components(int n, const Matching& c, const Matching& b, const Matching& a,
                                  const std::vector<bool>& bridged) {
    const int P = 2 * n;
    Dsu d(2 * P);
    for (int k = 0; k < P; ++k) {
        d.unite(k, c.partner(k));
        d.unite(P + k, P + a.partner(k));
        if (bridged[static_cast<std::size_t>(k)]) {
            d.unite(k, P + k);
        } else {
            d.unite(k, b.partner(k));
            d.unite(P + k, P + b.partner(k));
        }
    }
    // Roots are minimal node ids (unite keeps the smaller root), so ranking roots gives scan order.
    std::vector<int> rank(static_cast<std::size_t>(2 * P), -1), out(static_cast<std::size_t>(2 * P));
    int next = 0;
    for (int v = 0; v < 2 * P; ++v) {
        int r = d.find(v);
        if (rank[static_cast<std::size_t>(r)] < 0) rank[static_cast<std::size_t>(r)] = next++;
        out[static_cast<std::size_t>(v)] = rank[static_cast<std::size_t>(r)];
    }
    return out;
}

using Colored = std::vector<int>;  // sorted component indices
using State = std::map<Colored, Int>;

void put(State& s, Colored k, const Int& v) {
    if (v == 0) return;
    std::sort(k.begin(), k.end());
    auto [it, fresh] = s.try_emplace(std::move(k), v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) s.erase(it);
    }
}

int parity(int m) { return (m % 2) ? -1 : 1; }

}  // namespace

Terms multiply_monomials_diagrammatic(const MultiplicationRule& rule, int c, int b, int a, Mask x, Mask y) {
    const int n = rule.n();
    const ArcRing& R = ArcRing::get(n);
    const Matching& mc = R.matching(c);
    const Matching& mb = R.matching(b);
    const Matching& ma = R.matching(a);
    const TripleRule& tr = rule.at(c, b, a);
    const int P = 2 * n;

    std::vector<bool> bridged(static_cast<std::size_t>(P), false);
    std::vector<int> comp = label_components(n, mc, mb, ma, bridged);

    // D_0: colored top circles, then colored bottom circles (their indices are already scan indices).
    const int mt = R.circles(c, b);
    State st;
    {
        Colored k;
        for (int i = 0; i < 32; ++i)
            if (x >> i & 1) k.push_back(i);
        for (int i = 0; i < 32; ++i)
            if (y >> i & 1) k.push_back(mt + i);
        put(st, k, 1);
    }

    for (int xi : tr.order) {
        if (bridged[static_cast<std::size_t>(xi)]) continue;
        const int xj = mb.partner(xi);
        const int X = comp[static_cast<std::size_t>(xi)];       // through the top point
        const int Y = comp[static_cast<std::size_t>(P + xi)];   // through the bottom point
        bridged[static_cast<std::size_t>(xi)] = bridged[static_cast<std::size_t>(xj)] = true;
        std::vector<int> after = label_components(n, mc, mb, ma, bridged);

        // Old index -> new index for components untouched by this bridge.
        std::map<int, int> carry;
        for (int v = 0; v < 2 * P; ++v) carry.emplace(comp[static_cast<std::size_t>(v)], after[static_cast<std::size_t>(v)]);

        State next;
        if (X != Y) {
            const int Z = after[static_cast<std::size_t>(xi)];
            const int lo = std::min(X, Y), hi = std::max(X, Y);
            for (const auto& [k, v] : st) {
                bool hx = std::binary_search(k.begin(), k.end(), X);
                bool hy = std::binary_search(k.begin(), k.end(), Y);
                if (hx && hy) continue;  // both colored: zero
                int beta = 1;
                if (hx || hy) {
                    // The colored circle of the pair moves to the merged position if it was the later one.
                    int w = hx ? X : Y;
                    if (w == hi) {
                        int between = 0;
                        for (int q : k)
                            if (q > lo && q < hi) ++between;
                        beta = parity(between);
                    }
                }
                Colored out;
                for (int q : k) out.push_back((q == X || q == Y) ? Z : carry.at(q));
                put(next, out, beta * v);
            }
        } else {
            const int Zi = after[static_cast<std::size_t>(xi)];
            const int Zj = after[static_cast<std::size_t>(xj)];
            const int alpha = tr.tail[static_cast<std::size_t>(xi)] == xi ? 1 : -1;
            for (const auto& [k, v] : st) {
                Colored rest;
                bool colored = false;
                for (int q : k) {
                    if (q == X) colored = true;
                    else rest.push_back(carry.at(q));
                }
                if (!colored) {
                    int below_i = 0, below_j = 0;
                    for (int q : rest) {
                        below_i += q < Zi;
                        below_j += q < Zj;
                    }
                    Colored ki = rest, kj = rest;
                    ki.push_back(Zi);
                    kj.push_back(Zj);
                    put(next, ki, alpha * parity(below_i) * v);
                    put(next, kj, -alpha * parity(below_j) * v);
                } else {
                    Colored kk = rest;
                    kk.push_back(Zi);
                    kk.push_back(Zj);
                    int m = 0;
                    for (int q : kk) m += (q <= Zj || q < Zi);
                    put(next, kk, alpha * parity(m) * v);
                }
            }
        }
        st.swap(next);
        comp.swap(after);
    }

    const CircleDiagram& out = R.diagram(c, a);
    Terms res;
    for (const auto& [k, v] : st) {
        Mask m = 0;
        for (int q : k) {
            // Locate the W(c)a circle through any top point of component q.
            for (int p = 0; p < P; ++p)
                if (comp[static_cast<std::size_t>(p)] == q) {
                    m |= Mask{1} << out.circle_of[static_cast<std::size_t>(p)];
                    break;
                }
        }
        res[m] += v;
    }
    return res;
}

}  // namespace oddarc
