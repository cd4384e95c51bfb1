#pragma once

#include "oddarc/zlinalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oddarc {

// A monomial is a bitmask over label positions 0..m-1; the label order is the position order.
using Mask = std::uint32_t;
using Terms = std::map<Mask, Int>;

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Sign of sorting the labels of `a` followed by those of `b`; 0 when they share a label.
int wedge_sign(Mask a, Mask b);

// Relabel positions through `to` (old position -> new position, injective on the support).
// Returns the sorting sign, 0 on a collision.
int relabel_sign(Mask x, const std::vector<int>& to, Mask& out);

// Element of the exterior algebra on m ordered labels, exact integer coefficients.
struct ExteriorElement {
    int m = 0;
    Terms terms;

    static ExteriorElement zero(int m) { return {m, {}}; }
    static ExteriorElement one(int m) { return monomial(m, 0); }
    static ExteriorElement generator(int m, int label) { return monomial(m, Mask{1} << label); }
    static ExteriorElement monomial(int m, Mask mask, const Int& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add(Mask mask, const Int& c);
    ExteriorElement& operator+=(const ExteriorElement& o);
    ExteriorElement& operator-=(const ExteriorElement& o);
    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
    friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
    friend ExteriorElement operator*(const Int& k, ExteriorElement a);
    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) = default;

    // Post-shift degree of a monomial with k labels among m.
    int monomial_degree(Mask mask) const { return 2 * popcount(mask) - m; }
    std::string str() const;
};

// Tensor state of A^{⊗m}, A = Z[t]/t^2: a mask records the factors carrying t.
struct EvenTensorElement {
    int m = 0;
    Terms terms;

    static EvenTensorElement zero(int m) { return {m, {}}; }
    static EvenTensorElement one(int m) { return monomial(m, 0); }
    static EvenTensorElement monomial(int m, Mask mask, const Int& c = 1);

    bool is_zero() const { return terms.empty(); }
    void add(Mask mask, const Int& c);
    EvenTensorElement& operator+=(const EvenTensorElement& o);
    friend EvenTensorElement operator+(EvenTensorElement a, const EvenTensorElement& b) { return a += b; }
    friend bool operator==(const EvenTensorElement& a, const EvenTensorElement& b) = default;

    int monomial_degree(Mask mask) const { return 2 * popcount(mask) - m; }
    std::string str() const;
};

ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y);

// a*(x): remove label `label`, sign (-1)^{#labels of the monomial before it}.
ExteriorElement contract_dual(int label, const ExteriorElement& x);

// Identify l1 and l2 as one label placed at position `target` of the (m-1)-label result;
// other labels keep their relative order.
ExteriorElement relabel_merge(const ExteriorElement& x, int l1, int l2, int target);

// General index relabeling into a set of size new_m; collisions vanish, sorting signs applied.
ExteriorElement relabel(const ExteriorElement& x, const std::vector<int>& to, int new_m);

// Position map for removing `removed` labels and inserting fresh ones, other labels in order.
// `fixed` pins some old labels to given new positions; remaining old labels fill the free slots.
std::vector<int> order_preserving_map(int old_m, int new_m, const std::vector<std::pair<int, int>>& fixed,
                                      const std::vector<int>& reserved_new);

}  // namespace oddarc
