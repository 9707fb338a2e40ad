#include "doctest.h"

#include "lieaut/jordan.hpp"

using namespace lieaut;

namespace {

ProjPoint pt(const Cyc& z) { return ProjPoint::affine(z); }

// n = (sum of distinct special orbits) + k |G|
bool subset_sum_oracle(const std::vector<int>& special, int order, int n) {
    int s = (int)special.size();
    for (int mask = 0; mask < (1 << s); ++mask) {
        int used = 0;
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1) used += special[i];
        if (used <= n && (n - used) % order == 0) return true;
    }
    return false;
}

struct Group {
    std::string name;
    std::vector<int> special;
    int order;
};

} // namespace

TEST_CASE("smooth pencils and branch points") {
    PencilConfig p;
    p.family = {'R', 3};
    p.spectrum = {Cyc(0), Cyc(1), Cyc(-2)};
    CHECK(smooth_pencil(p));
    auto b = branch_points(p);
    REQUIRE(b.size() == 3);
    CHECK(same_point(b[2], pt(Cyc(2))));
    p.spectrum = {Cyc(0), Cyc(1), Cyc(1)};
    CHECK_FALSE(smooth_pencil(p));
}

TEST_CASE("group classes") {
    CHECK(GroupClass::parse("D_8").order == 8);
    CHECK(GroupClass::parse("A5").order == 60);
    CHECK(GroupClass::parse("Z_5").str() == "Z_5");
    CHECK(GroupClass::parse("S4").special_orbits() == std::vector<int>{6, 8, 12});
    CHECK_THROWS(GroupClass::parse("Q_8"));
}

TEST_CASE("exact classification") {
    Cyc i = Cyc::zeta(4);
    auto sq = classify_symmetry({pt(1), pt(-1), pt(i), pt(-i)});
    CHECK(sq.group == GroupClass::parse("D_8"));
    CHECK(sq.closed);
    CHECK(sq.elements.size() == 8);
    auto three = classify_symmetry({pt(1), pt(2), pt(7)});
    CHECK(three.group == GroupClass::parse("D_6"));
    auto generic = classify_symmetry({pt(1), pt(2), pt(7), pt(11), pt(-3)});
    CHECK(generic.group.order == 1);
    // 0, infinity and the fifth roots of unity
    std::vector<ProjPoint> pent{ProjPoint::infinity(), pt(0)};
    for (int k = 0; k < 5; ++k) pent.push_back(pt(Cyc::zeta(5, k)));
    CHECK(classify_symmetry(pent).group == GroupClass::parse("D_10"));
    CHECK(classify_symmetry(pent, false).group == GroupClass::parse("D_10"));
}

TEST_CASE("numeric classification") {
    CHECK(classify_symmetry_numeric({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}).group == GroupClass::parse("D_8"));
    CHECK(classify_symmetry_numeric({{1, 0}, {2, 0}, {7, 0}}).group == GroupClass::parse("D_6"));
}

TEST_CASE("feasible orders against a subset-sum oracle") {
    std::vector<Group> groups = {{"Z_2", {1, 1}, 2},     {"Z_3", {1, 1}, 3},         {"Z_7", {1, 1}, 7},
                                 {"D_4", {2, 2, 2}, 4},  {"D_10", {5, 5, 2}, 10},    {"A4", {4, 4, 6}, 12},
                                 {"S4", {6, 8, 12}, 24}, {"A5", {12, 20, 30}, 60}};
    for (const auto& g : groups) {
        GroupClass gc = GroupClass::parse(g.name);
        CHECK(gc.special_orbits() == g.special);
        for (int n = 3; n <= 200; ++n) {
            CAPTURE(g.name);
            CAPTURE(n);
            CHECK(feasible_orders(gc, n).feasible == subset_sum_oracle(g.special, g.order, n));
        }
    }
    CHECK(feasible_orders(GroupClass::parse("A5"), 32).feasible);
    CHECK(feasible_orders(GroupClass::parse("A5"), 62).feasible);
    CHECK_FALSE(feasible_orders(GroupClass::parse("A5"), 14).feasible);
}

TEST_CASE("witness configurations") {
    for (auto [g, n] : std::vector<std::pair<std::string, int>>{{"A5", 12}, {"A5", 32}, {"S4", 6}, {"A4", 4}, {"D_8", 4}, {"Z_5", 11}}) {
        CAPTURE(g);
        CAPTURE(n);
        PencilConfig p = witness_config(GroupClass::parse(g), n);
        CHECK((int)p.spectrum.size() == n);
        PencilReport r = pencil_report(p);
        CHECK(r.smooth);
        CHECK(r.symmetry.group == GroupClass::parse(g));
    }
    // {0, inf} and the cube roots of a point always have a dihedral symmetry
    CHECK_THROWS_AS(witness_config(GroupClass::parse("Z_3"), 5), std::domain_error);
    CHECK_THROWS_AS(witness_config(GroupClass::parse("A5"), 14), std::domain_error);
}

TEST_CASE("Jordan families") {
    JordanFamily f{'O', 3};
    CHECK_NOTHROW(f.validate());
    CHECK_THROWS(JordanFamily{'O', 4}.validate());
    CHECK_FALSE(JordanFamily{'C', 5}.variety().empty());
}
