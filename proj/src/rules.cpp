#include "oddarc/arc_rings.hpp"

#include <numeric>
#include <stdexcept>

namespace oddarc {

namespace {

TripleRule usual(const Matching& b) {
    TripleRule r;
    r.order.resize(static_cast<std::size_t>(b.points()));
    std::iota(r.order.begin(), r.order.end(), 0);
    r.tail.resize(r.order.size());
    for (int i = 0; i < b.points(); ++i) r.tail[static_cast<std::size_t>(i)] = std::min(i, b.partner(i));
    return r;
}

}  // namespace

bool admissible_order(const Matching& b, const std::vector<int>& order) {
    const int p = b.points();
    if (static_cast<int>(order.size()) != p) return false;
    std::vector<int> pos(static_cast<std::size_t>(p), -1);
    for (int k = 0; k < p; ++k) {
        int x = order[static_cast<std::size_t>(k)];
        if (x < 0 || x >= p || pos[static_cast<std::size_t>(x)] >= 0) return false;
        pos[static_cast<std::size_t>(x)] = k;
    }
    auto at = [&](int x) { return pos[static_cast<std::size_t>(x)]; };
    for (int i = 0; i < p; ++i) {
        int j = b.partner(i);
        if (j < i) continue;
        for (int k = i + 1; k < j; ++k)
            if (!(at(i) < at(k) || at(j) < at(k))) return false;
    }
    return true;
}

MultiplicationRule::MultiplicationRule(int n, std::string name, std::vector<TripleRule> table)
    : n_(n), name_(std::move(name)), table_(std::move(table)) {
    validate();
}

MultiplicationRule MultiplicationRule::standard(int n) {
    const ArcRing& R = ArcRing::get(n);
    std::vector<TripleRule> t;
    t.reserve(static_cast<std::size_t>(R.count() * R.count() * R.count()));
    for (int c = 0; c < R.count(); ++c)
        for (int b = 0; b < R.count(); ++b)
            for (int a = 0; a < R.count(); ++a) t.push_back(usual(R.matching(b)));
    return MultiplicationRule(n, "default", std::move(t));
}

MultiplicationRule MultiplicationRule::ordered(int n) {
    const ArcRing& R = ArcRing::get(n);
    std::vector<TripleRule> t;
    for (int c = 0; c < R.count(); ++c)
        for (int b = 0; b < R.count(); ++b)
            for (int a = 0; a < R.count(); ++a) {
                TripleRule r = usual(R.matching(b));
                // Orient each split from the component with the smaller basepoint in D_i.
                for (const BridgeStep& s : bridge_trace(n, c, b, a, r.order)) {
                    if (s.kind != StepKind::Split) continue;
                    int tail = s.key_i < s.key_j ? s.point : s.partner;
                    r.tail[static_cast<std::size_t>(s.point)] = tail;
                    r.tail[static_cast<std::size_t>(s.partner)] = tail;
                }
                t.push_back(std::move(r));
            }
    return MultiplicationRule(n, "ord", std::move(t));
}

MultiplicationRule MultiplicationRule::by_name(int n, std::string_view name) {
    if (name == "default") return standard(n);
    if (name == "ord") return ordered(n);
    throw std::invalid_argument("unknown rule: " + std::string(name));
}

const TripleRule& MultiplicationRule::at(int c, int b, int a) const {
    const int N = static_cast<int>(catalan(n_));
    return table_[static_cast<std::size_t>((c * N + b) * N + a)];
}

void MultiplicationRule::set(int c, int b, int a, TripleRule r) {
    const int N = static_cast<int>(catalan(n_));
    if (!admissible_order(ArcRing::get(n_).matching(b), r.order))
        throw std::invalid_argument("rule: inadmissible order");
    table_[static_cast<std::size_t>((c * N + b) * N + a)] = std::move(r);
    validate();
}

void MultiplicationRule::flip(int c, int b, int a) {
    const int N = static_cast<int>(catalan(n_));
    TripleRule& r = table_[static_cast<std::size_t>((c * N + b) * N + a)];
    const Matching& mb = ArcRing::get(n_).matching(b);
    for (int i = 0; i < mb.points(); ++i) {
        int j = mb.partner(i);
        if (i < j) {
            int t = r.tail[static_cast<std::size_t>(i)] == i ? j : i;
            r.tail[static_cast<std::size_t>(i)] = t;
            r.tail[static_cast<std::size_t>(j)] = t;
        }
    }
    name_ += "*";
}

void MultiplicationRule::validate() const {
    const ArcRing& R = ArcRing::get(n_);
    const std::size_t N = static_cast<std::size_t>(R.count());
    if (table_.size() != N * N * N) throw std::invalid_argument("rule: table is not total");
    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
        const Matching& b = R.matching(static_cast<int>((idx / N) % N));
        const TripleRule& r = table_[idx];
        if (!admissible_order(b, r.order)) throw std::invalid_argument("rule: inadmissible order");
        if (static_cast<int>(r.tail.size()) != b.points()) throw std::invalid_argument("rule: orientation size");
        for (int i = 0; i < b.points(); ++i) {
            int t = r.tail[static_cast<std::size_t>(i)];
            if (t != i && t != b.partner(i)) throw std::invalid_argument("rule: orientation off the arc");
            if (r.tail[static_cast<std::size_t>(b.partner(i))] != t)
                throw std::invalid_argument("rule: inconsistent orientation on an arc");
        }
    }
}

}  // namespace oddarc
