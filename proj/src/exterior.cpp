#include "oddarc/exterior.hpp"

#include <sstream>
#include <stdexcept>

namespace oddarc {

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    // Each label of a passes over every label of b that is smaller.
    int swaps = 0;
    for (Mask r = a; r; r &= r - 1) {
        int bit = __builtin_ctz(r);
        swaps += popcount(b & ((Mask{1} << bit) - 1));
    }
    return (swaps & 1) ? -1 : 1;
}

int relabel_sign(Mask x, const std::vector<int>& to, Mask& out) {
    out = 0;
    int inversions = 0;
    for (Mask r = x; r; r &= r - 1) {
        int t = to[static_cast<std::size_t>(__builtin_ctz(r))];
        if (t < 0) throw std::invalid_argument("relabel: label without image");
        Mask bit = Mask{1} << t;
        if (out & bit) return 0;
        // Earlier labels already placed above t form inversions.
        inversions += popcount(out & ~((bit << 1) - 1));
        out |= bit;
    }
    return (inversions & 1) ? -1 : 1;
}

namespace {

void add_term(Terms& t, Mask mask, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = t.try_emplace(mask, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

std::string terms_str(const Terms& t, const char* sym) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : t) {
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        os << abs(c);
        for (Mask r = mask; r; r &= r - 1) os << '*' << sym << (__builtin_ctz(r) + 1);
        first = false;
    }
    return os.str();
}

void check_label(int label, int m) {
    if (label < 0 || label >= m) throw std::invalid_argument("exterior: unknown label");
}

}  // namespace

ExteriorElement ExteriorElement::monomial(int m, Mask mask, const Int& c) {
    ExteriorElement e{m, {}};
    e.add(mask, c);
    return e;
}

void ExteriorElement::add(Mask mask, const Int& c) { add_term(terms, mask, c); }

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
    if (o.m != m) throw std::invalid_argument("exterior: label-set mismatch");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
    if (o.m != m) throw std::invalid_argument("exterior: label-set mismatch");
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

ExteriorElement operator*(const Int& k, ExteriorElement a) {
    if (k == 0) return ExteriorElement::zero(a.m);
    for (auto& [mask, c] : a.terms) c *= k;
    return a;
}

std::string ExteriorElement::str() const { return terms_str(terms, "e"); }

EvenTensorElement EvenTensorElement::monomial(int m, Mask mask, const Int& c) {
    EvenTensorElement e{m, {}};
    e.add(mask, c);
    return e;
}

void EvenTensorElement::add(Mask mask, const Int& c) { add_term(terms, mask, c); }

EvenTensorElement& EvenTensorElement::operator+=(const EvenTensorElement& o) {
    if (o.m != m) throw std::invalid_argument("tensor: label-set mismatch");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

std::string EvenTensorElement::str() const { return terms_str(terms, "t"); }

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) {
    if (x.m != y.m) throw std::invalid_argument("wedge: label-set mismatch");
    ExteriorElement out = ExteriorElement::zero(x.m);
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            int s = wedge_sign(a, b);
            if (s != 0) out.add(a | b, s * ca * cb);
        }
    return out;
}

ExteriorElement contract_dual(int label, const ExteriorElement& x) {
    check_label(label, x.m);
    std::vector<int> to(static_cast<std::size_t>(x.m));
    for (int i = 0; i < x.m; ++i) to[static_cast<std::size_t>(i)] = i < label ? i : i - 1;
    to[static_cast<std::size_t>(label)] = -1;
    ExteriorElement out = ExteriorElement::zero(x.m - 1);
    const Mask bit = Mask{1} << label;
    for (const auto& [mask, c] : x.terms) {
        if (!(mask & bit)) continue;
        int before = popcount(mask & (bit - 1));
        Mask rest;
        relabel_sign(mask & ~bit, to, rest);
        out.add(rest, (before & 1) ? Int(-c) : c);
    }
    return out;
}

ExteriorElement relabel(const ExteriorElement& x, const std::vector<int>& to, int new_m) {
    ExteriorElement out = ExteriorElement::zero(new_m);
    for (const auto& [mask, c] : x.terms) {
        Mask img;
        int s = relabel_sign(mask, to, img);
        if (s != 0) out.add(img, s * c);
    }
    return out;
}

std::vector<int> order_preserving_map(int old_m, int new_m, const std::vector<std::pair<int, int>>& fixed,
                                      const std::vector<int>& reserved_new) {
    std::vector<int> to(static_cast<std::size_t>(old_m), -1);
    std::vector<bool> taken(static_cast<std::size_t>(new_m), false);
    for (const auto& [o, n] : fixed) {
        check_label(o, old_m);
        check_label(n, new_m);
        to[static_cast<std::size_t>(o)] = n;
        taken[static_cast<std::size_t>(n)] = true;
    }
    for (int r : reserved_new) {
        check_label(r, new_m);
        taken[static_cast<std::size_t>(r)] = true;
    }
    int slot = 0;
    for (int o = 0; o < old_m; ++o) {
        if (to[static_cast<std::size_t>(o)] >= 0) continue;
        while (slot < new_m && taken[static_cast<std::size_t>(slot)]) ++slot;
        if (slot == new_m) throw std::invalid_argument("order_preserving_map: no room");
        to[static_cast<std::size_t>(o)] = slot;
        taken[static_cast<std::size_t>(slot)] = true;
    }
    return to;
}

ExteriorElement relabel_merge(const ExteriorElement& x, int l1, int l2, int target) {
    check_label(l1, x.m);
    check_label(l2, x.m);
    if (l1 == l2) throw std::invalid_argument("relabel_merge: identical labels");
    auto to = order_preserving_map(x.m, x.m - 1, {{l1, target}, {l2, target}}, {});
    return relabel(x, to, x.m - 1);
}

}  // namespace oddarc
