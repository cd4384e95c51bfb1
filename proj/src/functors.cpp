#include "oddarc/functors.hpp"

#include <sstream>
#include <stdexcept>

namespace oddarc {

namespace {

Mask image_mask(Mask x, const std::vector<int>& to) {
    Mask out = 0;
    for (Mask r = x; r; r &= r - 1) out |= Mask{1} << to[static_cast<std::size_t>(__builtin_ctz(r))];
    return out;
}

std::vector<int> swap_map(int m, int a, int b) {
    std::vector<int> to(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) to[static_cast<std::size_t>(i)] = i;
    std::swap(to[static_cast<std::size_t>(a)], to[static_cast<std::size_t>(b)]);
    return to;
}

void check_pos(int p, int m, const char* what) {
    if (p < 0 || p >= m) throw std::invalid_argument(std::string("move: bad ") + what);
}

}  // namespace

int ElementaryMove::output_size(int m) const {
    switch (kind) {
        case MoveKind::Birth:
        case MoveKind::Split: return m + 1;
        case MoveKind::Death:
        case MoveKind::Merge: return m - 1;
        case MoveKind::Permute: return m;
    }
    return m;
}

int ElementaryMove::euler_characteristic() const {
    switch (kind) {
        case MoveKind::Birth:
        case MoveKind::Death: return 1;
        case MoveKind::Merge:
        case MoveKind::Split: return -1;
        case MoveKind::Permute: return 0;
    }
    return 0;
}

ElementaryMove ElementaryMove::shifted(int k) const {
    ElementaryMove mv = *this;
    auto sh = [k](int& v) {
        if (v >= 0) v += k;
    };
    sh(mv.a);
    sh(mv.b);
    sh(mv.p1);
    sh(mv.p2);
    return mv;
}

void ElementaryMove::validate(int m) const {
    const int out = output_size(m);
    switch (kind) {
        case MoveKind::Birth: check_pos(p1, out, "birth position"); break;
        case MoveKind::Death: check_pos(a, m, "death label"); break;
        case MoveKind::Merge:
            check_pos(a, m, "merge label");
            check_pos(b, m, "merge label");
            check_pos(p1, out, "merge target");
            if (a == b) throw std::invalid_argument("move: merge of a label with itself");
            break;
        case MoveKind::Split:
            check_pos(a, m, "split label");
            check_pos(p1, out, "split position");
            check_pos(p2, out, "split position");
            if (p1 == p2) throw std::invalid_argument("move: split positions coincide");
            break;
        case MoveKind::Permute:
            check_pos(a, m, "permute label");
            check_pos(b, m, "permute label");
            if (a == b) throw std::invalid_argument("move: permutation of a label with itself");
            break;
    }
}

std::string ElementaryMove::str() const {
    std::ostringstream os;
    switch (kind) {
        case MoveKind::Birth: os << "birth@" << p1; break;
        case MoveKind::Death: os << "death(" << a << ")"; break;
        case MoveKind::Merge: os << "merge(" << a << "," << b << "->" << p1 << ")"; break;
        case MoveKind::Split: os << "split(" << a << "->" << p1 << "~>" << p2 << ")"; break;
        case MoveKind::Permute: os << "permute(" << a << "," << b << ")"; break;
    }
    return os.str();
}

ExteriorElement apply_odd(const ElementaryMove& mv, const ExteriorElement& x) {
    mv.validate(x.m);
    const int out = mv.output_size(x.m);
    switch (mv.kind) {
        case MoveKind::Birth:
            return relabel(x, order_preserving_map(x.m, out, {}, {mv.p1}), out);
        case MoveKind::Death:
            return contract_dual(mv.a, x);
        case MoveKind::Merge:
            return relabel_merge(x, mv.a, mv.b, mv.p1);
        case MoveKind::Split: {
            ExteriorElement lifted = relabel(x, order_preserving_map(x.m, out, {{mv.a, mv.p1}}, {mv.p2}), out);
            ExteriorElement diff = ExteriorElement::generator(out, mv.p1) - ExteriorElement::generator(out, mv.p2);
            return wedge(diff, lifted);
        }
        case MoveKind::Permute:
            return relabel(x, swap_map(x.m, mv.a, mv.b), x.m);
    }
    return x;
}

EvenTensorElement apply_even(const ElementaryMove& mv, const EvenTensorElement& x) {
    mv.validate(x.m);
    const int out = mv.output_size(x.m);
    EvenTensorElement r = EvenTensorElement::zero(out);
    switch (mv.kind) {
        case MoveKind::Birth: {
            auto to = order_preserving_map(x.m, out, {}, {mv.p1});
            for (const auto& [k, c] : x.terms) r.add(image_mask(k, to), c);
            break;
        }
        case MoveKind::Death: {
            const Mask bit = Mask{1} << mv.a;
            for (const auto& [k, c] : x.terms) {
                if (!(k & bit)) continue;  // epsilon(1) = 0
                Mask rest = k & ~bit;
                Mask img = (rest & (bit - 1)) | ((rest & ~((bit << 1) - 1)) >> 1);
                r.add(img, c);
            }
            break;
        }
        case MoveKind::Merge: {
            const Mask ba = Mask{1} << mv.a, bb = Mask{1} << mv.b;
            auto to = order_preserving_map(x.m, out, {{mv.a, mv.p1}, {mv.b, mv.p1}}, {});
            for (const auto& [k, c] : x.terms) {
                if ((k & ba) && (k & bb)) continue;  // t * t = 0
                r.add(image_mask(k, to), c);
            }
            break;
        }
        case MoveKind::Split: {
            const Mask ba = Mask{1} << mv.a;
            auto to = order_preserving_map(x.m, out, {{mv.a, mv.p1}}, {mv.p2});
            const Mask t1 = Mask{1} << mv.p1, t2 = Mask{1} << mv.p2;
            for (const auto& [k, c] : x.terms) {
                Mask img = image_mask(k & ~ba, to);
                if (k & ba) {
                    r.add(img | t1 | t2, c);  // t -> t (x) t
                } else {
                    r.add(img | t1, c);  // 1 -> t (x) 1 + 1 (x) t
                    r.add(img | t2, c);
                }
            }
            break;
        }
        case MoveKind::Permute: {
            auto to = swap_map(x.m, mv.a, mv.b);
            for (const auto& [k, c] : x.terms) r.add(image_mask(k, to), c);
            break;
        }
    }
    return r;
}

ExteriorElement apply_odd(const MoveWord& w, ExteriorElement x) {
    for (const auto& mv : w) x = apply_odd(mv, x);
    return x;
}

EvenTensorElement apply_even(const MoveWord& w, EvenTensorElement x) {
    for (const auto& mv : w) x = apply_even(mv, x);
    return x;
}

bool RelationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::string RelationReport::str() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.pass ? "pass " : "FAIL ") << e.name;
        if (!e.detail.empty()) os << " (" << e.detail << ")";
        os << '\n';
    }
    return os.str();
}

namespace {

using M = ElementaryMove;

struct Relation {
    std::string name;
    int core;                  // circles entering the core word
    std::vector<MoveWord> sides;
    int sign = 1;              // sides[1..] must equal sign * sides[0]
};

std::vector<Relation> relations_for(Theory th) {
    std::vector<Relation> rel = {
        {"permutation involution", 2, {{M::permute(0, 1), M::permute(0, 1)}, {}}},
        {"permutation braid", 3,
         {{M::permute(0, 1), M::permute(1, 2), M::permute(0, 1)}, {M::permute(1, 2), M::permute(0, 1), M::permute(1, 2)}}},
        {"unit permutation", 1, {{M::birth(0), M::permute(0, 1)}, {M::birth(1)}}},
        {"counit permutation", 2, {{M::death(0)}, {M::permute(0, 1), M::death(1)}}},
        {"merge permutation (left)", 3,
         {{M::merge(0, 1, 0), M::permute(0, 1)}, {M::permute(1, 2), M::permute(0, 1), M::merge(1, 2, 1)}}},
        {"merge permutation (right)", 3,
         {{M::merge(1, 2, 1), M::permute(0, 1)}, {M::permute(0, 1), M::permute(1, 2), M::merge(0, 1, 0)}}},
        {"split permutation (left)", 2,
         {{M::split(0, 0, 1), M::permute(1, 2), M::permute(0, 1)}, {M::permute(0, 1), M::split(1, 1, 2)}}},
        {"split permutation (right)", 2,
         {{M::split(1, 1, 2), M::permute(0, 1), M::permute(1, 2)}, {M::permute(0, 1), M::split(0, 0, 1)}}},
        {"merge associativity", 3, {{M::merge(0, 1, 0), M::merge(0, 1, 0)}, {M::merge(1, 2, 1), M::merge(0, 1, 0)}}},
        {"merge unit", 1, {{M::birth(0), M::merge(0, 1, 0)}, {M::birth(1), M::merge(0, 1, 0)}, {}}},
    };
    if (th == Theory::Even) {
        std::vector<Relation> even = {
            {"commutativity", 2, {{M::permute(0, 1), M::merge(0, 1, 0)}, {M::merge(0, 1, 0)}}},
            {"cocommutativity", 1, {{M::split(0, 0, 1), M::permute(0, 1)}, {M::split(0, 0, 1)}}},
            {"coassociativity", 1, {{M::split(0, 0, 1), M::split(0, 0, 1)}, {M::split(0, 0, 1), M::split(1, 1, 2)}}},
            {"Frobenius", 2,
             {{M::merge(0, 1, 0), M::split(0, 0, 1)},
              {M::split(1, 1, 2), M::merge(0, 1, 0)},
              {M::split(0, 0, 1), M::merge(1, 2, 1)}}},
            {"counit", 1, {{M::split(0, 0, 1), M::death(0)}, {M::split(0, 0, 1), M::death(1)}, {}}},
        };
        rel.insert(rel.end(), even.begin(), even.end());
    } else {
        std::vector<Relation> odd = {
            {"anti-commutativity", 2, {{M::permute(0, 1), M::merge(0, 1, 0)}, {M::merge(0, 1, 0, true)}}},
            {"anti-co-commutativity", 1, {{M::split(0, 0, 1), M::permute(0, 1)}, {M::split(0, 1, 0)}}},
            {"merge orientation independence", 2, {{M::merge(0, 1, 0)}, {M::merge(0, 1, 0, true)}}},
            {"split chronology changes sign", 1,
             {{M::split(0, 0, 1), M::split(0, 0, 1)}, {M::split(0, 0, 1), M::split(1, 1, 2)}}, -1},
        };
        rel.insert(rel.end(), odd.begin(), odd.end());
    }
    return rel;
}

MoveWord shift_word(const MoveWord& w, int k) {
    MoveWord out;
    for (const auto& mv : w) out.push_back(mv.shifted(k));
    return out;
}

template <class E>
E eval(const MoveWord& w, const E& x) {
    if constexpr (std::is_same_v<E, ExteriorElement>) return apply_odd(w, x);
    else return apply_even(w, x);
}

template <class E>
bool check_relation(const Relation& r, int max_labels, std::string& detail) {
    for (int extra = 0; r.core + extra <= max_labels; ++extra)
        for (int left = 0; left <= extra; ++left) {
            const int m = r.core + extra;
            std::vector<MoveWord> sides;
            for (const auto& s : r.sides) sides.push_back(shift_word(s, left));
            for (Mask mask = 0; mask < (Mask{1} << m); ++mask) {
                E x = E::monomial(m, mask);
                E ref = eval(sides[0], x);
                for (std::size_t k = 1; k < sides.size(); ++k) {
                    E got = eval(sides[k], x);
                    if (r.sign == -1) {
                        if constexpr (std::is_same_v<E, ExteriorElement>) got = Int(-1) * got;
                    }
                    if (!(got == ref)) {
                        std::ostringstream os;
                        os << "m=" << m << " left=" << left << " monomial=" << mask;
                        detail = os.str();
                        return false;
                    }
                }
            }
        }
    return true;
}

}  // namespace

RelationReport verify_relations(int max_labels, Theory theory) {
    if (max_labels < 1 || max_labels > 5) throw std::invalid_argument("verify_relations: max_labels out of range");
    RelationReport rep;
    for (const auto& r : relations_for(theory)) {
        if (r.core > max_labels) continue;
        RelationResult res{r.name, false, {}};
        res.pass = theory == Theory::Odd ? check_relation<ExteriorElement>(r, max_labels, res.detail)
                                         : check_relation<EvenTensorElement>(r, max_labels, res.detail);
        rep.entries.push_back(res);
    }
    // Closed surfaces: sphere and torus words on the empty collection.
    const MoveWord sphere = {M::birth(0), M::death(0)};
    const MoveWord torus = {M::birth(0), M::split(0, 0, 1), M::merge(0, 1, 0), M::death(0)};
    if (theory == Theory::Odd) {
        rep.entries.push_back({"sphere evaluates to 0", apply_odd(sphere, ExteriorElement::one(0)).is_zero(), {}});
        rep.entries.push_back({"torus evaluates to 0", apply_odd(torus, ExteriorElement::one(0)).is_zero(), {}});
    } else {
        rep.entries.push_back({"sphere evaluates to 0", apply_even(sphere, EvenTensorElement::one(0)).is_zero(), {}});
        rep.entries.push_back(
            {"torus evaluates to 2", apply_even(torus, EvenTensorElement::one(0)) == EvenTensorElement::monomial(0, 0, 2), {}});
    }
    return rep;
}

namespace {

// All single-move placements on m circles, m <= max_labels (inputs) and outputs <= max_labels.
std::vector<std::pair<int, ElementaryMove>> all_placements(int max_labels) {
    std::vector<std::pair<int, ElementaryMove>> out;
    for (int m = 0; m <= max_labels; ++m) {
        if (m + 1 <= max_labels)
            for (int p = 0; p <= m; ++p) out.push_back({m, M::birth(p)});
        for (int a = 0; a < m; ++a) {
            out.push_back({m, M::death(a)});
            for (int b = 0; b < m; ++b) {
                if (a == b) continue;
                out.push_back({m, M::permute(a, b)});
                for (int t = 0; t < m - 1; ++t) out.push_back({m, M::merge(a, b, t)});
            }
            if (m + 1 <= max_labels)
                for (int p = 0; p <= m; ++p)
                    for (int q = 0; q <= m; ++q)
                        if (p != q) out.push_back({m, M::split(a, p, q)});
        }
    }
    return out;
}

}  // namespace

bool verify_degree_law(int max_labels, std::string* failure) {
    for (const auto& [m, mv] : all_placements(max_labels)) {
        if (mv.kind == MoveKind::Permute) continue;
        const int shift = -mv.euler_characteristic();
        for (Mask mask = 0; mask < (Mask{1} << m); ++mask) {
            const int d0 = 2 * popcount(mask) - m;
            ExteriorElement o = apply_odd(mv, ExteriorElement::monomial(m, mask));
            EvenTensorElement e = apply_even(mv, EvenTensorElement::monomial(m, mask));
            for (const auto& [k, c] : o.terms)
                if (o.monomial_degree(k) - d0 != shift) {
                    if (failure) *failure = "odd " + mv.str();
                    return false;
                }
            for (const auto& [k, c] : e.terms)
                if (e.monomial_degree(k) - d0 != shift) {
                    if (failure) *failure = "even " + mv.str();
                    return false;
                }
        }
    }
    return true;
}

bool verify_mod2_moves(int max_labels, std::string* failure) {
    for (const auto& [m, mv] : all_placements(max_labels)) {
        for (Mask mask = 0; mask < (Mask{1} << m); ++mask) {
            ExteriorElement o = apply_odd(mv, ExteriorElement::monomial(m, mask));
            EvenTensorElement e = apply_even(mv, EvenTensorElement::monomial(m, mask));
            Terms all = o.terms;
            for (const auto& [k, c] : e.terms) all.try_emplace(k, 0);
            for (const auto& [k, unused] : all) {
                Int co = o.terms.count(k) ? o.terms.at(k) : Int(0);
                Int ce = e.terms.count(k) ? e.terms.at(k) : Int(0);
                if ((co - ce) % 2 != 0) {
                    if (failure) *failure = mv.str();
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace oddarc
