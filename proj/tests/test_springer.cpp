#include "doctest.h"

#include "lieaut/springer.hpp"

#include <algorithm>
#include <numeric>

using namespace lieaut;

namespace {

std::vector<int> closed_form_degrees(const LieType& t) {
    int n = t.rank;
    std::vector<int> d;
    switch (t.family) {
    case 'A':
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
    case 'D':
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        break;
    case 'G': d = {2, 6}; break;
    case 'F': d = {2, 6, 8, 12}; break;
    default:
        if (n == 6) d = {2, 5, 6, 8, 9, 12};
        else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
        else d = {2, 8, 12, 14, 18, 20, 24, 30};
    }
    std::sort(d.begin(), d.end());
    return d;
}

// codegrees of a Weyl group are d_i - 2
std::set<int> oracle_regular(const std::vector<int>& deg) {
    std::set<int> out;
    int h = *std::max_element(deg.begin(), deg.end());
    for (int d = 2; d <= h; ++d) {
        int a = 0, b = 0;
        for (int x : deg) {
            a += x % d == 0;
            b += (x - 2) % d == 0;
        }
        if (a == b) out.insert(d);
    }
    return out;
}

std::set<int> divisors(std::initializer_list<int> ns) {
    std::set<int> out;
    for (int n : ns)
        for (int d = 2; d <= n; ++d)
            if (n % d == 0) out.insert(d);
    return out;
}

} // namespace

TEST_CASE("degrees match the closed forms") {
    for (const auto& t : std::vector<LieType>{{'A', 3}, {'B', 5}, {'C', 4}, {'D', 4}, {'D', 7}, {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}}) {
        CAPTURE(t.str());
        auto d = degrees(RootSystem::cached(t));
        std::sort(d.begin(), d.end());
        CHECK(d == closed_form_degrees(t));
    }
}

TEST_CASE("regular numbers") {
    for (int n = 1; n <= 8; ++n) CHECK(regular_numbers({'A', n}) == divisors({n, n + 1}));
    for (int n = 2; n <= 8; ++n) CHECK(regular_numbers({'B', n}) == divisors({2 * n}));
    for (int n = 4; n <= 8; ++n) {
        CAPTURE(n);
        auto expect = divisors({2 * n - 2, n});
        CHECK(regular_numbers({'D', n}) == expect);
        CHECK(regular_numbers({'D', n}) == oracle_regular(closed_form_degrees({'D', n})));
    }
    CHECK(regular_numbers({'G', 2}) == std::set<int>{2, 3, 6});
    CHECK(regular_numbers({'F', 4}) == std::set<int>{2, 3, 4, 6, 8, 12});
    CHECK(regular_numbers({'E', 6}) == std::set<int>{2, 3, 4, 6, 8, 9, 12});
    CHECK(regular_numbers({'E', 7}) == std::set<int>{2, 3, 6, 7, 9, 14, 18});
    CHECK(regular_numbers({'E', 8}) == std::set<int>{2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30});
}

TEST_CASE("enumeration agrees with degrees on small types") {
    for (LieType t : {LieType{'A', 4}, LieType{'B', 3}, LieType{'C', 4}, LieType{'D', 4}, LieType{'G', 2},
                      LieType{'F', 4}}) {
        CAPTURE(t.str());
        auto a = regular_numbers_by_enumeration(RootSystem::cached(t));
        a.erase(1);
        CHECK(a == oracle_regular(closed_form_degrees(t)));
    }
}

TEST_CASE("a(d) counts degrees not divisible by d") {
    std::vector<int> e6 = {2, 5, 6, 8, 9, 12};
    CHECK(a_of(e6, 2) == 2);
    CHECK(a_of(e6, 3) == 3);
    CHECK(a_of(e6, 12) == 5);
    CHECK(a_of(e6, 1) == 0);
}

TEST_CASE("witnesses are regular eigenvectors") {
    for (auto [t, d] : std::vector<std::pair<LieType, int>>{{{'G', 2}, 6}, {{'F', 4}, 8}, {{'E', 6}, 9}, {{'B', 4}, 4}}) {
        CAPTURE(t.str());
        CAPTURE(d);
        const RootSystem& rs = RootSystem::cached(t);
        Witness w = regular_witness(rs, d, 1);
        CHECK(rs.is_regular(w.x));
        CartanVector wx = apply(rs, w.w, w.x);
        // w x = zeta_d^k x for a primitive zeta_d^k
        int hits = 0;
        for (int k = 1; k <= d; ++k)
            if (std::gcd(k, d) == 1) {
                bool eq = true;
                for (std::size_t i = 0; i < wx.coords.size(); ++i)
                    eq = eq && wx.coords[i] == Cyc::zeta(d, k) * w.x.coords[i];
                hits += eq;
            }
        CHECK(hits == 1);
        StabilizerReport s = line_stabilizer(rs, w.x, false);
        CHECK(s.order % d == 0);
    }
    CHECK_THROWS(regular_witness(LieType{'E', 6}, 5, 1));
}
