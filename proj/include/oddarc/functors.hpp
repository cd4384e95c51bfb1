#pragma once

#include "oddarc/exterior.hpp"

#include <string>
#include <vector>

namespace oddarc {

enum class MoveKind { Birth, Death, Merge, Split, Permute };

// Elementary cobordism acting on circles identified by their positions in the label order.
//   Birth:   fresh label inserted at position p1
//   Death:   label a removed
//   Merge:   labels a, b identified, result placed at p1 (in the shrunk order)
//   Split:   label a replaced by two labels at p1 and p2 (grown order), oriented p1 ~> p2
//   Permute: labels a and b exchanged
struct ElementaryMove {
    MoveKind kind = MoveKind::Birth;
    int a = -1, b = -1;
    int p1 = -1, p2 = -1;
    bool reversed = false;  // merge orientation; carried for fidelity, ignored by both functors

    static ElementaryMove birth(int pos) { return {MoveKind::Birth, -1, -1, pos, -1, false}; }
    static ElementaryMove death(int label) { return {MoveKind::Death, label, -1, -1, -1, false}; }
    static ElementaryMove merge(int l1, int l2, int target, bool rev = false) {
        return {MoveKind::Merge, l1, l2, target, -1, rev};
    }
    static ElementaryMove split(int label, int tail, int head) { return {MoveKind::Split, label, -1, tail, head, false}; }
    static ElementaryMove permute(int l1, int l2) { return {MoveKind::Permute, l1, l2, -1, -1, false}; }

    int output_size(int m) const;
    int euler_characteristic() const;  // of the elementary surface
    ElementaryMove shifted(int k) const;  // relabel positions by +k (identity circles on the left)
    void validate(int m) const;
    std::string str() const;
};

using MoveWord = std::vector<ElementaryMove>;

ExteriorElement apply_odd(const ElementaryMove& mv, const ExteriorElement& x);
EvenTensorElement apply_even(const ElementaryMove& mv, const EvenTensorElement& x);
ExteriorElement apply_odd(const MoveWord& w, ExteriorElement x);
EvenTensorElement apply_even(const MoveWord& w, EvenTensorElement x);

enum class Theory { Even, Odd };

struct RelationResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationResult> entries;
    bool all_pass() const;
    std::string str() const;
};

// Every relation of the theory's presentation, instantiated at every placement with at most
// max_labels circles, compared as linear maps on all basis monomials.
RelationReport verify_relations(int max_labels, Theory theory);

// Post-shift degree changes by -chi for every move placement and monomial (up to max_labels).
bool verify_degree_law(int max_labels, std::string* failure = nullptr);

// Even and odd maps of every move placement agree entrywise mod 2.
bool verify_mod2_moves(int max_labels, std::string* failure = nullptr);

}  // namespace oddarc
