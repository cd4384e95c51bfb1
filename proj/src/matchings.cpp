#include "oddarc/matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddarc {

namespace {

constexpr int kMaxN = 12;

void extend(std::string& cur, int open, int close, int n, std::vector<Matching>& out) {
    if (close == n) {
        out.push_back(Matching::parse(cur));
        return;
    }
    // '(' sorts before ')', so trying open first yields lexicographic order.
    if (open < n) {
        cur.push_back('(');
        extend(cur, open + 1, close, n, out);
        cur.pop_back();
    }
    if (close < open) {
        cur.push_back(')');
        extend(cur, open, close + 1, n, out);
        cur.pop_back();
    }
}

}  // namespace

Matching Matching::parse(std::string_view word) {
    if (word.empty() || word.size() % 2 != 0) throw std::invalid_argument("matching: bad length");
    Matching m;
    m.partner_.assign(word.size(), -1);
    std::vector<int> stack;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (word[static_cast<std::size_t>(i)] == '(') {
            stack.push_back(i);
        } else if (word[static_cast<std::size_t>(i)] == ')') {
            if (stack.empty()) throw std::invalid_argument("matching: unbalanced word");
            int j = stack.back();
            stack.pop_back();
            m.partner_[static_cast<std::size_t>(i)] = j;
            m.partner_[static_cast<std::size_t>(j)] = i;
        } else {
            throw std::invalid_argument("matching: unexpected character");
        }
    }
    if (!stack.empty()) throw std::invalid_argument("matching: unbalanced word");
    m.word_ = std::string(word);
    return m;
}

Matching Matching::from_partner(std::vector<int> partner) {
    const int p = static_cast<int>(partner.size());
    if (p == 0 || p % 2 != 0) throw std::invalid_argument("matching: bad size");
    std::string w(static_cast<std::size_t>(p), '?');
    for (int i = 0; i < p; ++i) {
        int j = partner[static_cast<std::size_t>(i)];
        if (j < 0 || j >= p || j == i || partner[static_cast<std::size_t>(j)] != i)
            throw std::invalid_argument("matching: partner is not a fixed-point-free involution");
        w[static_cast<std::size_t>(i)] = i < j ? '(' : ')';
    }
    Matching m = parse(w);
    if (m.partner_ != partner) throw std::invalid_argument("matching: arcs cross");
    return m;
}

Matching Matching::padded(int k) const {
    return parse(std::string(static_cast<std::size_t>(k), '(') + word_ + std::string(static_cast<std::size_t>(k), ')'));
}

std::vector<Matching> enumerate_matchings(int n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("enumerate_matchings: n out of range");
    std::vector<Matching> out;
    std::string cur;
    extend(cur, 0, 0, n, out);
    return out;
}

CircleDiagram closed_diagram(const Matching& b, const Matching& a) {
    if (a.n() != b.n()) throw std::invalid_argument("closed_diagram: size mismatch");
    CircleDiagram d;
    d.n = a.n();
    d.bottom = a;
    d.top = b;
    d.circle_of.assign(static_cast<std::size_t>(a.points()), -1);
    for (int s = 0; s < a.points(); ++s) {
        if (d.circle_of[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = d.size();
        std::vector<int> circ;
        int i = s;
        do {
            circ.push_back(i);
            d.circle_of[static_cast<std::size_t>(i)] = id;
            int j = b.partner(i);
            circ.push_back(j);
            d.circle_of[static_cast<std::size_t>(j)] = id;
            i = a.partner(j);
        } while (i != s);
        std::sort(circ.begin(), circ.end());
        d.circles.push_back(std::move(circ));
    }
    return d;
}

int distance(const Matching& a, const Matching& b) { return a.n() - closed_diagram(b, a).size(); }

bool is_arrow(const Matching& a, const Matching& b) {
    if (a.n() != b.n()) throw std::invalid_argument("is_arrow: size mismatch");
    std::vector<int> diff;
    for (int i = 0; i < a.points(); ++i)
        if (a.partner(i) != b.partner(i)) diff.push_back(i);
    if (diff.size() != 4) return false;
    const int i = diff[0], j = diff[1], k = diff[2], l = diff[3];
    return a.partner(i) == j && a.partner(k) == l && b.partner(i) == l && b.partner(j) == k;
}

int lower_arc_count(const Matching& a) {
    int depth = 0, count = 0;
    for (char ch : a.word()) {
        if (ch == '(') {
            if (depth == 0) ++count;
            ++depth;
        } else {
            --depth;
        }
    }
    return count;
}

long long binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace oddarc
