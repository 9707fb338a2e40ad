#pragma once

#include "lieaut/root_system.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lieaut {

/* Element of W x| Gamma, stored by the root indices of the images of the simple roots. */
struct OrthAut {
    std::vector<int> images;
    bool is_outer = false;

    friend bool operator==(const OrthAut& a, const OrthAut& b) { return a.images == b.images; }
    friend bool operator<(const OrthAut& a, const OrthAut& b) { return a.images < b.images; }
};

using RootPerm = std::vector<std::uint8_t>;

class WeylBoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

OrthAut identity_aut(const RootSystem& rs);
OrthAut simple_reflection(const RootSystem& rs, int i);
/* Columns are the images of the simple roots. */
IMat aut_matrix(const RootSystem& rs, const OrthAut& g);
RootPerm root_permutation(const RootSystem& rs, const OrthAut& g);
OrthAut from_permutation(const RootSystem& rs, const RootPerm& p);
OrthAut compose(const RootSystem& rs, const OrthAut& g, const OrthAut& h);
OrthAut inverse(const RootSystem& rs, const OrthAut& g);
int aut_order(const RootSystem& rs, const OrthAut& g);
int perm_order(const RootPerm& p);
bool is_inner(const RootSystem& rs, const RootPerm& p);
CartanVector apply(const RootSystem& rs, const OrthAut& g, const CartanVector& v);
/* Node permutations preserving the Cartan matrix (the group Gamma). */
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);
/* Word of simple reflections (applied right to left) equal to an inner element. */
std::vector<int> reduced_word(const RootSystem& rs, const OrthAut& g);
OrthAut from_word(const RootSystem& rs, const std::vector<int>& word);

std::vector<int> exponents(const RootSystem& rs);
std::vector<int> degrees(const RootSystem& rs);
std::uint64_t weyl_order(const RootSystem& rs);

constexpr std::uint64_t kDefaultWeylBound = 3000000;

/* Visits every element exactly once as a permutation of the roots. */
void for_each_weyl(const RootSystem& rs, bool include_outer, std::uint64_t bound,
                   const std::function<void(const RootPerm&)>& visit);
std::vector<OrthAut> enumerate_weyl(const RootSystem& rs, bool include_outer,
                                    std::uint64_t bound = kDefaultWeylBound);

/* All g with g x = xi x. */
std::vector<OrthAut> search_line_isometries(const RootSystem& rs, const CartanVector& x, const Cyc& xi,
                                            bool include_outer);

struct LineIsometry {
    OrthAut g;
    Cyc xi;
};
/* All g with g x in C x, each with its eigenvalue. */
std::vector<LineIsometry> line_isometries(const RootSystem& rs, const CartanVector& x, bool include_outer);

} // namespace lieaut
