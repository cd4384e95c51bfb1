#pragma once

#include "oddarc/arc_rings.hpp"
#include "oddarc/centers.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace oddarc {

// Weakly increasing sequence of variable indices (0-based); x_i^2 is a genuine monomial here.
using OddMonomial = std::vector<int>;

struct OddPolynomial {
    int nvars = 0;
    std::map<OddMonomial, Int> terms;

    static OddPolynomial zero(int nvars) { return {nvars, {}}; }
    static OddPolynomial constant(int nvars, const Int& c);
    static OddPolynomial variable(int nvars, int i);
    // Normalizes a word: x_i x_j = -x_j x_i for i != j.
    static OddPolynomial word(int nvars, std::vector<int> w, const Int& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add(const OddMonomial& m, const Int& c);
    OddPolynomial& operator+=(const OddPolynomial& o);
    friend OddPolynomial operator+(OddPolynomial a, const OddPolynomial& b) { return a += b; }
    friend OddPolynomial operator-(OddPolynomial a, const OddPolynomial& b);
    friend OddPolynomial operator*(const OddPolynomial& a, const OddPolynomial& b);
    friend bool operator==(const OddPolynomial& a, const OddPolynomial& b) = default;
};

OddPolynomial parse_poly(int nvars, std::string_view text);
std::string format_poly(const OddPolynomial& p);
std::string format_monomial_x(const OddMonomial& m);

// epsilon^I_r; I is a strictly increasing list of 0-based indices.
OddPolynomial epsilon_generator(int n, const std::vector<int>& I, int r);

struct EpsilonIndex {
    std::vector<int> I;
    int r;
};
std::vector<EpsilonIndex> epsilon_indices(int n);  // every admissible (I, k, r)

struct QuotientPresentation {
    int n = 0;
    std::vector<std::vector<OddMonomial>> ambient;  // per degree 0..n+1, lex order
    std::vector<IntMatrix> ideal;                   // canonical HNF basis of the left ideal slice
    std::vector<int> ranks;                         // quotient rank per degree
    std::vector<std::vector<OddMonomial>> basis;    // greedy-lex monomial basis per degree
    std::vector<IntMatrix> reduce;                  // ambient monomial -> basis coordinates
    bool torsion_free = true;
    bool left_equals_right = true;
    bool squares_vanish = true;
    bool mod2_basis = true;

    int total_rank() const;
    // Coordinates of a homogeneous polynomial of degree d on basis[d] (degree > n+1 gives zeros).
    std::vector<Int> coordinates(const OddPolynomial& p, int d) const;
    OddPolynomial reduced(const OddPolynomial& p) const;  // rewrite on the chosen basis
};

QuotientPresentation quotient_presentation(int n);

// s: x_i -> sum_a a_i (circle of W(a)a through basepoint i). Rule independent: lands in diagonal blocks.
RingElement map_s(const OddPolynomial& p, int n);

struct IsoCertificate {
    bool pass = false;
    std::string failed_stage;  // empty on success
    bool generators_vanish = false;
    bool injective = false;
    bool ranks_match = false;
    bool spans_center = false;
    bool structure_match = false;
    std::vector<int> quotient_ranks, center_ranks;
    std::string str() const;
};

IsoCertificate verify_springer_iso(int n, const MultiplicationRule& rule);

struct EvenPresentationCertificate {
    bool pass = false;
    std::string failed_stage;
    bool central = false;
    bool squares_zero = false;
    bool elementary_vanish = false;
    bool spans_center = false;
    int span_rank = 0;
    std::string str() const;
};

// X_i = sum_a (-1)^i t on the circle of W(a)a through point i (1-based i).
RingElement even_generator(int n, int i);
EvenPresentationCertificate even_presentation_check(int n);

// Laurent polynomials in q with exact coefficients.
struct Laurent {
    std::map<int, Int> c;  // exponent -> coefficient, no zeros
    friend bool operator==(const Laurent& a, const Laurent& b) = default;
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    Int coefficient_sum() const;
    std::string str() const;
};

Laurent qint(int m);
Laurent qfactorial(int m);
Laurent qbinom(int m, int k);
Laurent exact_divide(const Laurent& num, const Laurent& den);  // throws if not exact

}  // namespace oddarc
