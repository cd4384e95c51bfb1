#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oddarc {

// Crossingless perfect matching of 2n basepoints. Points are 0-based internally.
class Matching {
public:
    Matching() = default;
    static Matching parse(std::string_view word);            // balanced parenthesis word
    static Matching from_partner(std::vector<int> partner);  // validates involution + noncrossing

    int n() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }
    int partner(int i) const { return partner_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& partners() const { return partner_; }
    const std::string& word() const { return word_; }

    // Enclose the matching in k extra outer arcs (the standard inclusion B^m -> B^{m+k}).
    Matching padded(int k) const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.partner_ == b.partner_; }
    friend bool operator<(const Matching& a, const Matching& b) { return a.word_ < b.word_; }

private:
    std::vector<int> partner_;
    std::string word_;
};

// W(b)a: circles are orbits of partner_a o partner_b, ordered by minimal basepoint.
struct CircleDiagram {
    int n = 0;
    Matching bottom;  // a
    Matching top;     // b
    std::vector<std::vector<int>> circles;  // each sorted
    std::vector<int> circle_of;             // basepoint -> circle index
    int size() const { return static_cast<int>(circles.size()); }
};

std::vector<Matching> enumerate_matchings(int n);
CircleDiagram closed_diagram(const Matching& b, const Matching& a);
int distance(const Matching& a, const Matching& b);
bool is_arrow(const Matching& a, const Matching& b);
int lower_arc_count(const Matching& a);

long long catalan(int n);
long long binomial(int m, int k);

}  // namespace oddarc
