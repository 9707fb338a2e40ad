#include "doctest.h"

#include "lieaut/diagrams.hpp"

using namespace lieaut;

namespace {

int dim_of(char f, int n, int k) { return homogeneous_dim({f, n}, {k}); }

std::set<std::string> names(const std::vector<HilbComponent>& cs) {
    std::set<std::string> out;
    for (const auto& c : cs) out.insert(c.name);
    return out;
}

} // namespace

TEST_CASE("dimensions of Grassmannians") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) CHECK(dim_of('A', n - 1, k) == k * (n - k));
    // OG(k,2n+1): k(2n+1-k) - k(k+1)/2
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) CHECK(dim_of('B', n, k) == k * (2 * n + 1 - k) - k * (k + 1) / 2);
    // IG(k,2n): 2k(n-k) + k(k+1)/2
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) CHECK(dim_of('C', n, k) == 2 * k * (n - k) + k * (k + 1) / 2);
    // OG(k,2n), k <= n-2: k(2n-k) - k(k+1)/2; spinor varieties n(n-1)/2
    for (int n = 4; n <= 8; ++n) {
        for (int k = 1; k <= n - 2; ++k) CHECK(dim_of('D', n, k) == k * (2 * n - k) - k * (k + 1) / 2);
        CHECK(dim_of('D', n, n) == n * (n - 1) / 2);
    }
    CHECK(dim_of('E', 6, 1) == 16);
    CHECK(dim_of('E', 6, 2) == 21);
    CHECK(dim_of('E', 7, 7) == 27);
    CHECK(dim_of('E', 7, 1) == 33);
    CHECK(dim_of('E', 8, 8) == 57);
    CHECK(dim_of('F', 4, 1) == 15);
    CHECK(dim_of('F', 4, 4) == 15);
    CHECK(dim_of('G', 2, 1) == 5);
    CHECK(dim_of('G', 2, 2) == 5);
}

TEST_CASE("names") {
    CHECK(homogeneous_name({'A', 6}, {3}) == "G(3,7)");
    CHECK(homogeneous_name({'C', 6}, {4}) == "IG(4,12)");
    CHECK(homogeneous_name({'E', 6}, {2, 6}) == "E6/P2,6");
    CHECK(MarkedDiagram::grassmannian({'E', 7}, 3).str() == "E7/P3");
}

TEST_CASE("lines on Grassmannians") {
    // lines on G(k,n) form the two-step flag variety on nodes k-1, k+1
    auto c = hilb_linear(MarkedDiagram::grassmannian({'A', 6}, 3), 1);
    REQUIRE(c.size() == 1);
    CHECK(c[0].parameter_nodes == std::set<int>{2, 4});
    // F(2,4;7): G(4,7) then G(2,4)
    CHECK(c[0].dim == dim_of('A', 6, 4) + dim_of('A', 3, 2));
    // maximal linear spaces of G(3,7): P^3 and P^4
    CHECK(max_linear_dim(MarkedDiagram::grassmannian({'A', 6}, 3)) == 4);
    // E6/P1: P^4 spaces in two families
    auto e6 = hilb_linear(MarkedDiagram::grassmannian({'E', 6}, 1), 4);
    CHECK(names(e6) == std::set<std::string>{"E6/P2,6", "E6/P5"});
    CHECK(max_linear_dim(MarkedDiagram::grassmannian({'E', 6}, 1)) == 5);
    CHECK(max_linear_dim(MarkedDiagram::grassmannian({'E', 8}, 8)) == 7);
    CHECK(max_linear_dim(MarkedDiagram::grassmannian({'G', 2}, 1)) == 1);
}

TEST_CASE("marked chains") {
    auto chains = marked_chains(MarkedDiagram::grassmannian({'D', 5}, 3), 2);
    CHECK(chains.size() == 3);
    for (const auto& ch : chains) CHECK(ch.front() == 3);
}

TEST_CASE("unique extension") {
    auto lin = [](char f, int n, int k) { return ue_check(MarkedDiagram::grassmannian({f, n}, k), UEKind::Linear); };
    CHECK(lin('A', 6, 3).holds);
    CHECK(lin('E', 7, 7).holds);
    CHECK_FALSE(lin('B', 4, 2).holds);
    CHECK_FALSE(lin('B', 5, 1).holds);
    CHECK(lin('B', 5, 3).holds);
    CHECK_FALSE(lin('F', 4, 1).holds);
    CHECK_FALSE(lin('A', 1, 1).applicable);
    CHECK(ue_check(MarkedDiagram::grassmannian({'F', 4}, 4), UEKind::Quadric).holds);
    CHECK_FALSE(ue_check(MarkedDiagram::grassmannian({'A', 5}, 2), UEKind::Quadric).applicable);
}

TEST_CASE("identifications and Omega2") {
    auto c1 = long_identification(MarkedDiagram::grassmannian({'C', 4}, 1));
    REQUIRE(c1);
    CHECK(c1->type == LieType{'A', 7});
    CHECK(is_long_type(MarkedDiagram::grassmannian({'C', 4}, 4)));
    CHECK_FALSE(is_long_type(MarkedDiagram::grassmannian({'C', 4}, 2)));
    CHECK(in_omega2(MarkedDiagram::grassmannian({'C', 5}, 5)));
    CHECK(in_omega2(MarkedDiagram::grassmannian({'B', 4}, 2)));
    CHECK_FALSE(in_omega2(MarkedDiagram::grassmannian({'A', 5}, 2)));
}

TEST_CASE("grassmannian enumeration") {
    CHECK(grassmannians({'E', 8}).size() == 8);
    CHECK(all_types(1, 3).size() == 3 + 2 + 1 + 1);
    CHECK(diagram_symmetries({'D', 4}).size() == 6);
}
