#include "doctest.h"

#include "lieaut/mobius.hpp"
#include "lieaut/weyl.hpp"

#include <numeric>

using namespace lieaut;

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// closed forms
int root_count(const LieType& t) {
    int n = t.rank;
    switch (t.family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'G': return 12;
    case 'F': return 48;
    default: return n == 6 ? 72 : n == 7 ? 126 : 240;
    }
}

std::uint64_t weyl_count(const LieType& t) {
    int n = t.rank;
    switch (t.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1ull << n) * factorial(n);
    case 'D': return (1ull << (n - 1)) * factorial(n);
    case 'G': return 12;
    case 'F': return 1152;
    default: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    }
}

std::vector<LieType> sample_types() {
    return {{'A', 1}, {'A', 5}, {'B', 2}, {'B', 6}, {'C', 3}, {'C', 7}, {'D', 4}, {'D', 8},
            {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};
}

} // namespace

TEST_CASE("root counts, Weyl orders and degrees") {
    for (const auto& t : sample_types()) {
        CAPTURE(t.str());
        const RootSystem& rs = RootSystem::cached(t);
        CHECK(rs.num_roots() == root_count(t));
        CHECK(weyl_order(rs) == weyl_count(t));
        auto deg = degrees(rs);
        REQUIRE((int)deg.size() == t.rank);
        std::uint64_t prod = 1;
        int sum = 0;
        for (int d : deg) {
            prod *= d;
            sum += d - 1;
        }
        CHECK(prod == weyl_count(t));
        CHECK(sum == rs.num_positive());
    }
}

TEST_CASE("Cartan matrices") {
    for (const auto& t : sample_types()) {
        const RootSystem& rs = RootSystem::cached(t);
        const IMat& a = rs.cartan();
        for (int i = 0; i < t.rank; ++i) {
            CHECK(a[i][i] == 2);
            for (int j = 0; j < t.rank; ++j)
                if (i != j) {
                    CHECK(a[i][j] <= 0);
                    int p = a[i][j] * a[j][i];
                    CHECK(p >= 0);
                    CHECK(p <= 3);
                    CHECK((a[i][j] == 0) == (a[j][i] == 0));
                }
        }
    }
    // B2: node 2 short, G2: node 2 short
    const IMat& b2 = RootSystem::cached({'B', 2}).cartan();
    CHECK(b2[0][1] == -2);
    CHECK(b2[1][0] == -1);
    const IMat& g2 = RootSystem::cached({'G', 2}).cartan();
    CHECK(g2[0][1] * g2[1][0] == 3);
    CHECK(RootSystem::cached({'G', 2}).is_long(RootSystem::cached({'G', 2}).simple_index(0)));
}

TEST_CASE("long and short roots") {
    auto count_long = [](const LieType& t) {
        const RootSystem& rs = RootSystem::cached(t);
        int c = 0;
        for (int i = 0; i < rs.num_roots(); ++i) c += rs.is_long(i);
        return c;
    };
    CHECK(count_long({'B', 4}) == 2 * 4 * 3);
    CHECK(count_long({'C', 4}) == 2 * 4);
    CHECK(count_long({'G', 2}) == 6);
    CHECK(count_long({'F', 4}) == 24);
}

TEST_CASE("reflections preserve the form") {
    const RootSystem& rs = RootSystem::cached({'F', 4});
    CartanVector x, y;
    for (int i = 0; i < 4; ++i) {
        x.coords.push_back(Cyc(Rational(i + 2, 3)));
        y.coords.push_back(Cyc(Rational(5 - 2 * i, 7)));
    }
    for (int i = 0; i < 4; ++i) {
        OrthAut s = simple_reflection(rs, i);
        CHECK(rs.form(apply(rs, s, x), apply(rs, s, y)) == rs.form(x, y));
        CHECK(aut_order(rs, s) == 2);
    }
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(RootSystem::cached({'A', 4})).size() == 2);
    CHECK(diagram_automorphisms(RootSystem::cached({'D', 4})).size() == 6);
    CHECK(diagram_automorphisms(RootSystem::cached({'D', 5})).size() == 2);
    CHECK(diagram_automorphisms(RootSystem::cached({'E', 6})).size() == 2);
    CHECK(diagram_automorphisms(RootSystem::cached({'E', 7})).size() == 1);
    CHECK(diagram_automorphisms(RootSystem::cached({'B', 3})).size() == 1);
}

TEST_CASE("enumeration visits |W| elements") {
    for (LieType t : {LieType{'A', 3}, LieType{'B', 3}, LieType{'G', 2}, LieType{'D', 4}}) {
        const RootSystem& rs = RootSystem::cached(t);
        std::uint64_t n = 0;
        for_each_weyl(rs, false, kDefaultWeylBound, [&](const RootPerm&) { ++n; });
        CHECK(n == weyl_order(rs));
    }
    CHECK_THROWS_AS(enumerate_weyl(RootSystem::cached({'E', 8}), false, 1000), WeylBoundExceeded);
}

TEST_CASE("words round trip") {
    const RootSystem& rs = RootSystem::cached({'E', 6});
    std::vector<int> word{0, 2, 3, 1, 4, 5, 3, 2, 0};
    OrthAut g = from_word(rs, word);
    OrthAut h = from_word(rs, reduced_word(rs, g));
    CHECK(g == h);
    CHECK(compose(rs, g, inverse(rs, g)) == identity_aut(rs));
}

TEST_CASE("cyclotomic arithmetic") {
    Cyc z = Cyc::zeta(5);
    Cyc s = 0;
    Cyc p = 1;
    for (int k = 0; k < 5; ++k) {
        s += p;
        p *= z;
    }
    CHECK(s.is_zero());
    CHECK(p == Cyc(1));
    CHECK(z * z.inverse() == Cyc(1));
    CHECK(z.galois(2) == z * z);
    CHECK(Cyc::zeta(4) * Cyc::zeta(4) == Cyc(-1));
    CHECK(Cyc::zeta(3) + Cyc::zeta(3, 2) == Cyc(-1));
    CHECK(Cyc::zeta(12, 3) == Cyc::zeta(4));
    CHECK(Cyc(Rational(-7, 7)) == Cyc(-1));
    CHECK(parse_cyc("3/6") == Cyc(Rational(1, 2)));
    CHECK(parse_cyc("cyclotomic(4): 0,1") == Cyc::zeta(4));
    CHECK(parse_cyc_list("1,2/3,-4").size() == 3);
    CHECK(parse_cyc_list("cyclotomic(3): 0,1; 2").size() == 2);
}

TEST_CASE("square roots of rationals") {
    for (Rational q : {Rational(2), Rational(-1), Rational(-3), Rational(5), Rational(5, 7), Rational(-6, 11)}) {
        q.canonicalize();
        Cyc r = sqrt_rational(q);
        CHECK(r * r == Cyc(q));
    }
}
