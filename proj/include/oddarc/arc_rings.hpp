#pragma once

#include "oddarc/exterior.hpp"
#include "oddarc/functors.hpp"
#include "oddarc/matchings.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace oddarc {

// Shared per-n data: B^n in canonical order and every closed diagram W(b)a.
class ArcRing {
public:
    static const ArcRing& get(int n);  // cached, thread-safe

    int n() const { return n_; }
    int count() const { return static_cast<int>(matchings_.size()); }
    const Matching& matching(int i) const { return matchings_[static_cast<std::size_t>(i)]; }
    const std::vector<Matching>& matchings() const { return matchings_; }
    int index_of(std::string_view word) const;  // throws on unknown word
    const CircleDiagram& diagram(int top, int bottom) const {
        return diagrams_[static_cast<std::size_t>(top * count() + bottom)];
    }
    int circles(int top, int bottom) const { return diagram(top, bottom).size(); }
    int triple_index(int c, int b, int a) const { return (c * count() + b) * count() + a; }

private:
    explicit ArcRing(int n);
    int n_;
    std::vector<Matching> matchings_;
    std::vector<CircleDiagram> diagrams_;
    std::map<std::string, int, std::less<>> index_;
};

// Monomial of top(OH)bottom = OF(W(top)bottom): colored circles as a mask (bit i = circle i+1).
struct BasisMonomial {
    int top = 0, bottom = 0;
    Mask colored = 0;
    friend auto operator<=>(const BasisMonomial&, const BasisMonomial&) = default;
};

int exterior_degree(const BasisMonomial& m);
int monomial_degree(int n, const BasisMonomial& m);  // 2|colored| - |circles| + n

// Exact integer combination of basis monomials of H^n or OH^n.
struct RingElement {
    int n = 0;
    std::map<BasisMonomial, Int> terms;

    static RingElement zero(int n) { return {n, {}}; }
    static RingElement monomial(int n, const BasisMonomial& m, const Int& c = 1);
    static RingElement unit(int n);  // sum of all 1_a

    bool is_zero() const { return terms.empty(); }
    void add(const BasisMonomial& m, const Int& c);
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const Int& k, RingElement a);
    friend bool operator==(const RingElement& a, const RingElement& b) = default;
};

RingElement parse_element(int n, std::string_view text);
std::string format_element(const RingElement& x);
std::string format_monomial(int n, const BasisMonomial& m);

// Basepoint order and split orientation for one triple (c,b,a). Points are 0-based.
struct TripleRule {
    std::vector<int> order;  // permutation of 0..2n-1
    std::vector<int> tail;   // tail[i]: endpoint that is the source of the orientation on b's arc through i
};

class MultiplicationRule {
public:
    MultiplicationRule() = default;
    MultiplicationRule(int n, std::string name, std::vector<TripleRule> table);

    static MultiplicationRule standard(int n);  // usual order, i ~> j for i < j
    static MultiplicationRule ordered(int n);   // usual order, orientation from component order
    static MultiplicationRule by_name(int n, std::string_view name);  // "default" | "ord"

    int n() const { return n_; }
    const std::string& name() const { return name_; }
    const TripleRule& at(int c, int b, int a) const;
    void set(int c, int b, int a, TripleRule r);
    void flip(int c, int b, int a);  // reverse every orientation of one triple
    void validate() const;           // throws std::invalid_argument on an inadmissible rule

private:
    int n_ = 0;
    std::string name_;
    std::vector<TripleRule> table_;
};

// Admissibility of an order for the middle matching b.
bool admissible_order(const Matching& b, const std::vector<int>& order);

// Topology of the bridge procedure W(c)b W(b)a -> W(c)a.
enum class StepKind { Skip, Merge, Split };

struct BridgeStep {
    StepKind kind = StepKind::Skip;
    int point = -1, partner = -1;  // x_i and its partner under b
    int before = 0, after = 0;     // number of components
    int l1 = -1, l2 = -1;          // merge: labels through T_i and B_i; split: l1 = label being split
    int target = -1;               // merge: position of the merged component
    int pos_i = -1, pos_j = -1;    // split: positions of the components through x_i and x_j
    int key_i = 0, key_j = 0;      // split: min basepoint keys (2*point + row), row 0 = top
};

std::vector<BridgeStep> bridge_trace(int n, int c, int b, int a, const std::vector<int>& order);
int split_count(const std::vector<BridgeStep>& steps);

// Normative multiplication: exterior/tensor simulation through the functor moves.
Terms multiply_monomials(const MultiplicationRule& rule, int c, int b, int a, Mask x, Mask y, Theory th);
RingElement multiply(const MultiplicationRule& rule, const RingElement& x, const RingElement& y, Theory th);

// Independent implementation from the colored-diagram sign tables (odd theory).
Terms multiply_monomials_diagrammatic(const MultiplicationRule& rule, int c, int b, int a, Mask x, Mask y);
RingElement multiply_diagrammatic(const MultiplicationRule& rule, const RingElement& x, const RingElement& y);

std::vector<std::pair<BasisMonomial, int>> ring_basis(int n, Theory th);

// Structure constants on every composable basis pair, stored per triple.
class ProductTable {
public:
    int n() const { return n_; }
    // Product of [c|b|x] and [b|a|y].
    const Terms& at(int c, int b, int a, Mask x, Mask y) const;

    friend ProductTable product_table_serial(const MultiplicationRule&, Theory);
    friend ProductTable product_table(const MultiplicationRule&, Theory);
    friend bool operator==(const ProductTable& a, const ProductTable& b) { return a.cells_ == b.cells_; }

private:
    int n_ = 0;
    std::vector<std::size_t> offset_;  // per triple
    std::vector<Terms> cells_;
};

ProductTable product_table_serial(const MultiplicationRule& rule, Theory th);  // reference
ProductTable product_table(const MultiplicationRule& rule, Theory th);         // OpenMP over triples

// Multiply through a table instead of simulating.
RingElement multiply_with(const ProductTable& t, const RingElement& x, const RingElement& y);

// Standard inclusion OH^m -> OH^n: pad both matchings with n-m enclosing arcs.
BasisMonomial embed_monomial(int m, int n, const BasisMonomial& x);

}  // namespace oddarc
