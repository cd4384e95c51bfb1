#include "doctest.h"

#include "oddarc/matchings.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

using namespace oddarc;

namespace {

// Orbit count of partner_a o partner_b by direct walking, independent of closed_diagram.
int orbit_count(const Matching& b, const Matching& a) {
    std::vector<int> seen(static_cast<std::size_t>(a.points()), 0);
    int orbits = 0;
    for (int s = 0; s < a.points(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++orbits;
        int p = s;
        do {
            seen[static_cast<std::size_t>(p)] = 1;
            p = a.partner(p);
            seen[static_cast<std::size_t>(p)] = 1;
            p = b.partner(p);
        } while (p != s);
    }
    return orbits;
}

// Shortest path lengths in the undirected arrow graph.
std::vector<std::vector<int>> arrow_graph_distances(const std::vector<Matching>& B) {
    const std::size_t N = B.size();
    std::vector<std::vector<int>> d(N, std::vector<int>(N, -1));
    for (std::size_t s = 0; s < N; ++s) {
        std::deque<std::size_t> q{s};
        d[s][s] = 0;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v < N; ++v)
                if (d[s][v] < 0 && (is_arrow(B[u], B[v]) || is_arrow(B[v], B[u]))) {
                    d[s][v] = d[s][u] + 1;
                    q.push_back(v);
                }
        }
    }
    return d;
}

}  // namespace

TEST_CASE("enumeration order and counts") {
    auto b1 = enumerate_matchings(1);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].word() == "()");
    auto b2 = enumerate_matchings(2);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0].word() == "(())");
    CHECK(b2[1].word() == "()()");
    const long long expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 1; n <= 8; ++n) {
        auto B = enumerate_matchings(n);
        CHECK(static_cast<long long>(B.size()) == expected[n - 1]);
        CHECK(static_cast<long long>(B.size()) == binomial(2 * n, n) / (n + 1));
        for (std::size_t i = 1; i < B.size(); ++i) CHECK(B[i - 1].word() < B[i].word());
    }
    CHECK_THROWS_AS(enumerate_matchings(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_matchings(13), std::invalid_argument);
}

TEST_CASE("parsing and partner arrays") {
    Matching m = Matching::parse("(()())");
    CHECK(m.n() == 3);
    CHECK(m.partners() == std::vector<int>{5, 2, 1, 4, 3, 0});
    CHECK(Matching::from_partner(m.partners()) == m);
    CHECK(Matching::from_partner(m.partners()).word() == "(()())");
    CHECK(m.padded(1).word() == "((()()))");
    CHECK_THROWS_AS(Matching::parse("(()"), std::invalid_argument);
    CHECK_THROWS_AS(Matching::parse(")("), std::invalid_argument);
    CHECK_THROWS_AS(Matching::parse("(x)"), std::invalid_argument);
    CHECK_THROWS_AS(Matching::from_partner({2, 3, 0, 1}), std::invalid_argument);  // crossing
    CHECK_THROWS_AS(Matching::from_partner({0, 1}), std::invalid_argument);        // fixed points
}

TEST_CASE("closed diagrams") {
    Matching a = Matching::parse("(())"), b = Matching::parse("()()");
    CircleDiagram d = closed_diagram(b, a);
    REQUIRE(d.size() == 1);
    CHECK(d.circles[0] == std::vector<int>{0, 1, 2, 3});
    CircleDiagram aa = closed_diagram(a, a);
    REQUIRE(aa.size() == 2);
    CHECK(aa.circles[0] == std::vector<int>{0, 3});  // outer arc first: minimal basepoint order
    CHECK(aa.circles[1] == std::vector<int>{1, 2});
    CHECK_THROWS_AS(closed_diagram(a, Matching::parse("()")), std::invalid_argument);

    for (int n = 1; n <= 4; ++n) {
        auto B = enumerate_matchings(n);
        for (const auto& x : B) {
            CHECK(closed_diagram(x, x).size() == n);
            for (const auto& y : B) {
                CircleDiagram c = closed_diagram(y, x);
                CHECK(c.size() == orbit_count(y, x));
                CHECK(c.size() + distance(x, y) == n);
                CHECK(distance(x, y) == distance(y, x));
                std::vector<int> all;
                for (std::size_t k = 0; k < c.circles.size(); ++k) {
                    if (k) CHECK(c.circles[k - 1].front() < c.circles[k].front());
                    for (int p : c.circles[k]) {
                        CHECK(c.circle_of[static_cast<std::size_t>(p)] == static_cast<int>(k));
                        all.push_back(p);
                    }
                }
                std::sort(all.begin(), all.end());
                std::vector<int> iota(static_cast<std::size_t>(2 * n));
                std::iota(iota.begin(), iota.end(), 0);
                CHECK(all == iota);
            }
        }
    }
}

TEST_CASE("arrows and distance") {
    Matching a = Matching::parse("()()"), b = Matching::parse("(())");
    CHECK(is_arrow(a, b));
    CHECK_FALSE(is_arrow(a, a));
    CHECK(distance(b, a) == 1);
    CHECK(distance(b, b) == 0);
    for (int n = 2; n <= 4; ++n) {
        auto B = enumerate_matchings(n);
        auto g = arrow_graph_distances(B);
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = 0; j < B.size(); ++j) {
                const int d = distance(B[i], B[j]);
                if (is_arrow(B[i], B[j])) CHECK(d == 1);
                if (d == 1) CHECK((is_arrow(B[i], B[j]) || is_arrow(B[j], B[i])));
                CHECK(g[i][j] == d);
                for (std::size_t k = 0; k < B.size(); ++k) CHECK(d <= distance(B[i], B[k]) + distance(B[k], B[j]));
            }
    }
}

TEST_CASE("lower arcs") {
    CHECK(lower_arc_count(Matching::parse("()()")) == 2);
    CHECK(lower_arc_count(Matching::parse("(())")) == 1);
    const long long expected[] = {2, 6, 20, 70, 252, 924};
    for (int n = 1; n <= 6; ++n) {
        long long s = 0;
        for (const auto& a : enumerate_matchings(n)) s += 1LL << lower_arc_count(a);
        CHECK(s == expected[n - 1]);
        CHECK(s == binomial(2 * n, n));
    }
}
