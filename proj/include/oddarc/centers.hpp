#pragma once

#include "oddarc/arc_rings.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oddarc {

enum class CenterFlavor { Even, OddRing, Odd };  // Z(H^n), Z(OH^n_C), OZ(OH^n_C)

struct CenterBasis {
    int n = 0;
    CenterFlavor flavor = CenterFlavor::Odd;
    std::vector<RingElement> generators;   // ordered by exterior degree, then canonical HNF order
    std::vector<int> degrees;              // exterior degree p of each generator
    std::map<int, int> graded_rank;        // p -> rank

    int rank() const { return static_cast<int>(generators.size()); }
    std::string str() const;  // "graded_rank:" header, then one element per line
};

CenterBasis odd_center(int n, const MultiplicationRule& rule);
CenterBasis ring_center(int n, const MultiplicationRule& rule);
CenterBasis even_center(int n);

// Canonical HNF basis of the degree-p slice, in coordinates over the diagonal monomials of that degree.
std::vector<BasisMonomial> diagonal_monomials(int n, int p);
IntMatrix slice_lattice(const CenterBasis& basis, int p);
// Same for an arbitrary family of diagonal elements homogeneous of degree p.
IntMatrix span_lattice(int n, int p, const std::vector<RingElement>& elems);

// Integer coordinates of x in the basis, nullopt if x is outside the lattice.
std::optional<std::vector<Int>> center_coordinates(const CenterBasis& basis, const RingElement& x);

struct CenterStructure {
    std::vector<std::vector<std::vector<Int>>> product;  // product[i][j] = coordinates of g_i g_j
    bool closed = true;
    bool associative = true;
    bool supercommutative = true;
};

// Throws std::logic_error if a product leaves the lattice (internal inconsistency).
CenterStructure center_structure_constants(const CenterBasis& basis, const MultiplicationRule& rule);

}  // namespace oddarc
