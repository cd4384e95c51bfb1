#include "oddarc/springer.hpp"

#include <sstream>
#include <stdexcept>

namespace oddarc {

namespace {

void bump(Laurent& p, int e, const Int& v) {
    if (v == 0) return;
    auto [it, fresh] = p.c.try_emplace(e, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) p.c.erase(it);
    }
}

}  // namespace

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c)
        for (const auto& [eb, cb] : b.c) bump(r, ea + eb, ca * cb);
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, v] : b.c) bump(r, e, v);
    return r;
}

Int Laurent::coefficient_sum() const {
    Int s = 0;
    for (const auto& [e, v] : c) s += v;
    return s;
}

std::string Laurent::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        const auto& [e, v] = *it;
        os << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        Int a = abs(v);
        if (e == 0) os << a;
        else {
            if (a != 1) os << a << '*';
            os << "q";
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

Laurent qint(int m) {
    if (m < 0) throw std::invalid_argument("qint: negative argument");
    Laurent r;
    for (int k = 0; k < m; ++k) bump(r, m - 1 - 2 * k, 1);
    return r;
}

Laurent qfactorial(int m) {
    Laurent r;
    r.c[0] = 1;
    for (int k = 2; k <= m; ++k) r = r * qint(k);
    return r;
}

Laurent exact_divide(const Laurent& num, const Laurent& den) {
    if (den.c.empty()) throw std::invalid_argument("exact_divide: division by zero");
    const int dtop = den.c.rbegin()->first;
    const Int& dlead = den.c.rbegin()->second;
    const int dspan = dtop - den.c.begin()->first;
    Laurent rem = num, quo;
    while (!rem.c.empty()) {
        if (rem.c.rbegin()->first - rem.c.begin()->first < dspan)
            throw std::invalid_argument("exact_divide: not divisible");
        const int e = rem.c.rbegin()->first - dtop;
        const Int& top = rem.c.rbegin()->second;
        if (top % dlead != 0) throw std::invalid_argument("exact_divide: not divisible");
        Laurent t;
        t.c[e] = top / dlead;
        quo = quo + t;
        Laurent sub = t * den;
        for (auto& [k, v] : sub.c) v = -v;
        rem = rem + sub;
    }
    return quo;
}

Laurent qbinom(int m, int k) {
    if (k < 0 || m < 0 || k > m) throw std::invalid_argument("qbinom: need 0 <= k <= m");
    return exact_divide(qfactorial(m), qfactorial(k) * qfactorial(m - k));
}

}  // namespace oddarc
