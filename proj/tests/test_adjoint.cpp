#include "doctest.h"

#include "lieaut/adjoint.hpp"

using namespace lieaut;

namespace {

CartanVector weights(std::vector<long> v) {
    CartanVector x;
    x.basis = Basis::Weights;
    for (long c : v) x.coords.push_back(Cyc(c));
    return x;
}

CartanVector unit(int rank, int i) {
    CartanVector x;
    for (int j = 0; j < rank; ++j) x.coords.push_back(Cyc(j == i ? 1 : 0));
    return x;
}

bool same(const CartanVector& a, const CartanVector& b) { return a.coords == b.coords; }

} // namespace

TEST_CASE("domain rejections") {
    AdjointElement c;
    c.type = {'C', 3};
    c.x_s = weights({1, 2, 3});
    CHECK_THROWS_AS(classify_case(c), DomainRejection);
    CHECK_THROWS_AS(normal_form({'C', 4}, 1), DomainRejection);

    // alpha_1 of F4 is long; a zero weight coordinate makes it vanish
    AdjointElement f;
    f.type = {'F', 4};
    f.x_s = weights({0, 5, 7, 11});
    CHECK_THROWS_AS(aut_report(f), DomainRejection);
    CHECK(tevelev_eval(RootSystem::cached(f.type), f.x_s).is_zero());

    f.x_s = weights({3, 5, 7, 11});
    f.nilpotent = NilpotentTag::SingleRoot;
    CHECK_THROWS_AS(classify_case(f), DomainRejection);
    CHECK_THROWS_AS(parse_nilpotent("alpha"), std::invalid_argument);
}

TEST_CASE("case labels") {
    AdjointElement f;
    f.type = {'F', 4};
    f.x_s = weights({3, 5, 0, 11});
    CaseInfo c = classify_case(f);
    CHECK(c.label == 2);
    CHECK(c.vanishing.size() == 1);
    f.nilpotent = NilpotentTag::SingleRoot;
    CHECK(classify_case(f).label == 3);
    for (int label = 1; label <= 6; ++label) {
        CAPTURE(label);
        AdjointElement e = normal_form({'F', 4}, label, 2);
        CHECK(classify_case(e).label == label);
        CHECK_FALSE(tevelev_eval(RootSystem::cached(e.type), e.x_s).is_zero());
    }
    CHECK_THROWS_AS(normal_form({'A', 3}, 2), DomainRejection);
}

TEST_CASE("B_x on an A2 perp system") {
    PerpSystem p;
    p.rs = RootSystem::build({'A', 2});
    p.type = "A2";
    p.x_perp = weights({1, 2});
    CHECK(b_x_by_condition(p) == "1");
    p.x_perp = weights({4, 4});
    CHECK(b_x_by_condition(p) == "Z2");
    // alpha_1 + alpha_2 = -alpha_1 on x: the pair (-alpha_1, alpha_1 + alpha_2) has equal values
    p.x_perp = weights({1, -2});
    CHECK(b_x_by_condition(p) == "Z2");
}

TEST_CASE("C_x: conditions against the outer-isometry search") {
    // in type A the diagram automorphism is -w0, so the search always finds Z2
    for (std::uint64_t seed : {1, 2, 3}) {
        AutHxReport r = aut_report(normal_form({'A', 3}, 1, seed));
        CHECK(r.dx.C_x_search == "Z2");
    }
    AutHxReport a3 = aut_report(normal_form({'A', 3}, 1, 3));
    CHECK(a3.dx.C_x_conditions == "1");
    CHECK_FALSE(a3.discrepancies.empty());
    for (LieType t : {LieType{'D', 4}, LieType{'D', 5}, LieType{'E', 6}})
        for (std::uint64_t seed : {1, 2}) {
            CAPTURE(t.str());
            AutHxReport r = aut_report(normal_form(t, 1, seed));
            CHECK(r.dx.C_x_conditions == r.dx.C_x_search);
        }
    CHECK(c_x_by_conditions(RootSystem::cached({'E', 6}), normal_form({'E', 6}, 1, 1).x_s) == "Z2");
}

TEST_CASE("the F4 element sigma") {
    const RootSystem& rs = RootSystem::cached({'F', 4});
    OrthAut w = from_word(rs, {1, 2, 1, 3, 2, 1});
    CHECK(w == f4_sigma_from_word());
    CHECK(same(apply(rs, w, unit(4, 2)), unit(4, 3)));
    CHECK(same(apply(rs, w, unit(4, 3)), unit(4, 2)));
    CartanVector hi;
    hi.coords = {Cyc(1), Cyc(3), Cyc(4), Cyc(2)};
    CHECK(same(apply(rs, w, unit(4, 0)), hi));
    CHECK(aut_order(rs, w) == 2);
    bool listed = false;
    for (const auto& g : f4_outer_sigma()) listed = listed || g == w;
    CHECK(listed);
}

TEST_CASE("regular normal forms") {
    for (auto [t, d] : std::vector<std::pair<LieType, int>>{{{'G', 2}, 6}, {{'F', 4}, 12}, {{'E', 6}, 9}, {{'D', 4}, 4}}) {
        CAPTURE(t.str());
        AutHxReport r = aut_report(normal_form_with_order(t, 1, d, 1));
        CHECK(r.smooth);
        CHECK(r.stab_order == d);
        CHECK(r.info.label == 1);
    }
}
