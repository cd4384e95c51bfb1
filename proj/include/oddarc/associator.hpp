#pragma once

#include "oddarc/arc_rings.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddarc {

// Total F2-valued table on tuples of matchings of B^n (arity = tuple length).
// Arity 2 = 1-cochains on the arrow groupoid, arity 3 = 2-cochains, arity 4 = 3-cochains.
struct SignTable {
    int n = 0;
    int arity = 0;
    int count = 0;  // |B^n|
    std::vector<std::uint8_t> bits;     // 1 = sign -1; always 0 on undefined cells
    std::vector<std::uint8_t> defined;  // 0 where the sign could not be determined

    static SignTable zero(int n, int arity);
    std::size_t index(const std::vector<int>& t) const;
    std::vector<int> tuple(std::size_t idx) const;
    std::uint8_t get(const std::vector<int>& t) const { return bits[index(t)]; }
    void set(const std::vector<int>& t, std::uint8_t v) { bits[index(t)] = v & 1; }
    int sign(const std::vector<int>& t) const { return get(t) ? -1 : 1; }
    bool is_defined(const std::vector<int>& t) const { return defined[index(t)] != 0; }
    std::size_t undefined_count() const;
    bool is_zero() const;
    std::string str() const;  // "w1|w2|...|wk -> +1" per tuple in canonical order, "-> undefined" for holes
    friend bool operator==(const SignTable&, const SignTable&) = default;
};

SignTable parse_sign_table(int n, int arity, std::string_view text);

// S(c,b,a) = (d(c,b) + d(b,a) - d(c,a)) / 2.
int scission_count(int n, int c, int b, int a);

// Chronology sign of the quadruple: (xy)z = (-1)^{p(x) S(c,b,a)} phi0 x(yz) on the whole block.
// Throws std::domain_error if both composite maps vanish identically.
int phi0(const MultiplicationRule& rule, int d, int c, int b, int a);
int phi0(const ProductTable& table, int d, int c, int b, int a);

// Cells where phi0 throws std::domain_error are marked undefined.
SignTable phi0_table_serial(const MultiplicationRule& rule);
SignTable phi0_table(const MultiplicationRule& rule);  // OpenMP over quadruples

// Simplicial coboundary: arity k -> arity k+1, (d t)(x_0..x_k) = sum_i t(x_0..^x_i..x_k).
// A cell of the result is defined iff all of its faces are.
SignTable coboundary(const SignTable& t);

struct CocycleReport {
    bool pass = true;
    std::size_t checked = 0;                  // quintuples whose five faces are all defined
    std::vector<std::array<int, 5>> defects;  // quintuples where d(phi0) = 1
    bool defects_are_scission_cup = true;     // d(phi0) = S(e,d,c) S(c,b,a) on every checked quintuple
};
CocycleReport cocycle_defect(const SignTable& phi);

// (S u S)(e,d,c,b,a) = S(e,d,c) S(c,b,a) mod 2: the coboundary of the phi1 part of the associator.
SignTable scission_cup(int n);

// Some fully defined t of arity k-1 with d t = target on every defined cell of target,
// canonical (free unknowns 0); nullopt if none exists.
std::optional<SignTable> solve_coboundary(const SignTable& target);

// Sign gamma with mult_C = gamma mult_C' on block (c,b,a); std::domain_error if the block map vanishes.
int rule_sign_ratio(const MultiplicationRule& C, const MultiplicationRule& Cp, int c, int b, int a);
SignTable rule_ratio_table(const MultiplicationRule& C, const MultiplicationRule& Cp);  // vanishing blocks undefined

struct RuleIsomorphism {
    bool same_associator = false;
    std::optional<std::array<int, 4>> first_difference;  // first quadruple where the phi0 tables differ
    bool hole_obstruction = false;                       // d(eta) != 0 only on undefined phi0 cells
    std::optional<SignTable> epsilon;                    // x -> (-1)^{eps(top,bottom)} x
    bool verified = false;                               // full structure-constant comparison
    std::string str() const;
};

RuleIsomorphism build_rule_isomorphism(const MultiplicationRule& C, const MultiplicationRule& Cp);

// Orientation flips of the standard rule (single triples, then pairs) until one has the
// same associator as the standard rule and a nonzero epsilon.
struct SameAssociatorWitness {
    MultiplicationRule rule;
    std::vector<std::array<int, 3>> flipped;
    RuleIsomorphism iso;
};
std::optional<SameAssociatorWitness> find_same_associator_rule(int n);

// (xy)z = (-1)^{p(x)S} phi0 x(yz) on every homogeneous basis triple with both sides nonzero.
// Returns the number of triples checked; throws std::logic_error on the first violation.
long verify_associator_identity(const MultiplicationRule& rule, const SignTable& phi);

}  // namespace oddarc
