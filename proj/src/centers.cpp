#include "oddarc/centers.hpp"

#include <sstream>
#include <stdexcept>

namespace oddarc {

std::vector<BasisMonomial> diagonal_monomials(int n, int p) {
    const ArcRing& R = ArcRing::get(n);
    std::vector<BasisMonomial> out;
    for (int a = 0; a < R.count(); ++a)
        for (Mask m = 0; m < (Mask{1} << R.circles(a, a)); ++m)
            if (popcount(m) == p) out.push_back({a, a, m});
    return out;
}

namespace {

using Rows = std::vector<std::vector<Int>>;

// Accumulate `coeff * terms` (monomials of block (top,bottom)) into rows keyed by target mask.
void scatter(std::map<Mask, std::vector<Int>>& rows, const Terms& terms, std::size_t col, std::size_t ncols, int sign) {
    for (const auto& [mask, c] : terms) {
        auto& r = rows[mask];
        if (r.empty()) r.assign(ncols, 0);
        r[col] += sign * c;
    }
}

struct Slice {
    std::vector<BasisMonomial> unknowns;
    std::map<int, std::vector<std::size_t>> by_block;  // a -> unknown indices
};

Slice make_slice(int n, int p) {
    Slice s;
    s.unknowns = diagonal_monomials(n, p);
    for (std::size_t k = 0; k < s.unknowns.size(); ++k) s.by_block[s.unknowns[k].top].push_back(k);
    return s;
}

Rows assemble(int n, const Slice& s, const MultiplicationRule& rule, Theory th, bool strict) {
    const ArcRing& R = ArcRing::get(n);
    const int N = R.count();
    const std::size_t nu = s.unknowns.size();
    std::vector<Rows> per(static_cast<std::size_t>(N * N));
    // z_a 1_ab - 1_ab z_b = 0, one independent slot per ordered pair.
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < N * N; ++idx) {
        const int a = idx / N, b = idx % N;
        std::map<Mask, std::vector<Int>> rows;
        if (a != b) {
            if (auto it = s.by_block.find(a); it != s.by_block.end())
                for (std::size_t k : it->second)
                    scatter(rows, multiply_monomials(rule, a, a, b, s.unknowns[k].colored, 0, th), k, nu, 1);
            if (auto it = s.by_block.find(b); it != s.by_block.end())
                for (std::size_t k : it->second)
                    scatter(rows, multiply_monomials(rule, a, b, b, 0, s.unknowns[k].colored, th), k, nu, -1);
        } else if (strict) {
            // z_a g = g z_a for every degree-one generator g of a(.)a.
            if (auto it = s.by_block.find(a); it != s.by_block.end())
                for (int i = 0; i < R.circles(a, a); ++i) {
                    std::map<Mask, std::vector<Int>> grow;
                    const Mask g = Mask{1} << i;
                    for (std::size_t k : it->second) {
                        scatter(grow, multiply_monomials(rule, a, a, a, s.unknowns[k].colored, g, th), k, nu, 1);
                        scatter(grow, multiply_monomials(rule, a, a, a, g, s.unknowns[k].colored, th), k, nu, -1);
                    }
                    for (auto& [m, r] : grow) per[static_cast<std::size_t>(idx)].push_back(std::move(r));
                }
        }
        for (auto& [m, r] : rows) per[static_cast<std::size_t>(idx)].push_back(std::move(r));
    }
    Rows all;
    for (auto& block : per)
        for (auto& r : block) all.push_back(std::move(r));
    return all;
}

CenterBasis solve_center(int n, const MultiplicationRule& rule, Theory th, bool strict, CenterFlavor flavor) {
    if (n < 1 || n > 4) throw std::invalid_argument("center: n out of range");
    if (rule.n() != n) throw std::invalid_argument("center: rule size mismatch");
    CenterBasis out;
    out.n = n;
    out.flavor = flavor;
    for (int p = 0; p <= n; ++p) {
        Slice s = make_slice(n, p);
        Rows rows = assemble(n, s, rule, th, strict);
        IntMatrix M = IntMatrix::from_rows(rows, s.unknowns.size());
        IntMatrix K = kernel_basis_Z(M);
        out.graded_rank[p] = static_cast<int>(K.cols());
        for (std::size_t j = 0; j < K.cols(); ++j) {
            RingElement z = RingElement::zero(n);
            for (std::size_t i = 0; i < K.rows(); ++i) z.add(s.unknowns[i], K(i, j));
            out.generators.push_back(std::move(z));
            out.degrees.push_back(p);
        }
    }
    return out;
}

std::vector<Int> slice_vector(const std::vector<BasisMonomial>& mons, const RingElement& z, bool& outside) {
    std::vector<Int> v(mons.size());
    std::size_t hit = 0;
    for (std::size_t i = 0; i < mons.size(); ++i)
        if (auto it = z.terms.find(mons[i]); it != z.terms.end()) {
            v[i] = it->second;
            ++hit;
        }
    outside = hit != z.terms.size();
    return v;
}

}  // namespace

CenterBasis odd_center(int n, const MultiplicationRule& rule) {
    return solve_center(n, rule, Theory::Odd, false, CenterFlavor::Odd);
}

CenterBasis ring_center(int n, const MultiplicationRule& rule) {
    return solve_center(n, rule, Theory::Odd, true, CenterFlavor::OddRing);
}

CenterBasis even_center(int n) {
    return solve_center(n, MultiplicationRule::standard(n), Theory::Even, true, CenterFlavor::Even);
}

IntMatrix span_lattice(int n, int p, const std::vector<RingElement>& elems) {
    auto mons = diagonal_monomials(n, p);
    Lattice L(mons.size());
    for (const auto& e : elems) {
        bool outside = false;
        auto v = slice_vector(mons, e, outside);
        if (outside) throw std::invalid_argument("span_lattice: element not diagonal of the given degree");
        L.add(std::move(v));
    }
    return L.basis();
}

IntMatrix slice_lattice(const CenterBasis& basis, int p) {
    std::vector<RingElement> g;
    for (std::size_t i = 0; i < basis.generators.size(); ++i)
        if (basis.degrees[i] == p) g.push_back(basis.generators[i]);
    return span_lattice(basis.n, p, g);
}

std::optional<std::vector<Int>> center_coordinates(const CenterBasis& basis, const RingElement& x) {
    std::vector<Int> coords(basis.generators.size());
    std::size_t covered = 0;
    for (int p = 0; p <= basis.n; ++p) {
        auto mons = diagonal_monomials(basis.n, p);
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < basis.generators.size(); ++i)
            if (basis.degrees[i] == p) idx.push_back(i);
        bool outside = false;
        auto v = slice_vector(mons, x, outside);
        for (const auto& c : v) covered += c != 0;
        IntMatrix G(mons.size(), idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            bool o2 = false;
            auto col = slice_vector(mons, basis.generators[idx[j]], o2);
            for (std::size_t i = 0; i < mons.size(); ++i) G(i, j) = col[i];
        }
        auto sol = solve_Q(G, v);
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            const Rational& q = (*sol)[j];
            if (denominator(q) != 1) return std::nullopt;
            coords[idx[j]] = numerator(q);
        }
    }
    if (covered != x.terms.size()) return std::nullopt;  // some term off the diagonal
    return coords;
}

CenterStructure center_structure_constants(const CenterBasis& basis, const MultiplicationRule& rule) {
    const Theory th = basis.flavor == CenterFlavor::Even ? Theory::Even : Theory::Odd;
    const ProductTable table = product_table(rule, th);
    const auto& g = basis.generators;
    const std::size_t k = g.size();
    CenterStructure cs;
    cs.product.assign(k, std::vector<std::vector<Int>>(k));
    std::vector<std::vector<RingElement>> prod(k, std::vector<RingElement>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            prod[i][j] = multiply_with(table, g[i], g[j]);
            auto c = center_coordinates(basis, prod[i][j]);
            if (!c) throw std::logic_error("center: product of generators leaves the center lattice");
            cs.product[i][j] = std::move(*c);
        }
    for (std::size_t i = 0; i < k && cs.supercommutative; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            int sign = (basis.flavor == CenterFlavor::Odd && (basis.degrees[i] * basis.degrees[j]) % 2) ? -1 : 1;
            if (!(prod[i][j] == Int(sign) * prod[j][i])) {
                cs.supercommutative = false;
                break;
            }
        }
    for (std::size_t i = 0; i < k && cs.associative; ++i)
        for (std::size_t j = 0; j < k && cs.associative; ++j)
            for (std::size_t l = 0; l < k; ++l)
                if (!(multiply_with(table, prod[i][j], g[l]) == multiply_with(table, g[i], prod[j][l]))) {
                    cs.associative = false;
                    break;
                }
    return cs;
}

std::string CenterBasis::str() const {
    std::ostringstream os;
    os << "graded_rank:";
    for (const auto& [p, r] : graded_rank) os << (p == 0 ? " " : ",") << r;
    os << '\n';
    for (const auto& z : generators) os << format_element(z) << '\n';
    return os.str();
}

}  // namespace oddarc
