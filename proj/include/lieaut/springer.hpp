#pragma once

#include "lieaut/weyl.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lieaut {

struct RegularData {
    LieType type;
    std::vector<int> degrees;
    std::vector<int> codegrees;
    std::set<int> regular_numbers;
    std::map<int, int> a;
    std::set<int> maximal_orders;
};

/* #{d_i : d does not divide d_i} */
int a_of(const std::vector<int>& degrees, int d);
/* d >= 2 is regular iff it divides as many degrees as codegrees (0 counts as divisible). */
std::set<int> regular_numbers_from_degrees(const std::vector<int>& degrees);
/* Maximal elements of E# for m < m' iff m | m' and a(m) = a(m'). */
std::set<int> prec_maximal(const std::vector<int>& degrees, const std::set<int>& regular);

RegularData regular_data(const LieType& t);
std::set<int> regular_numbers(const LieType& t);

/* Integer test: does the element have a regular eigenvector for a primitive d-th root of unity? */
bool zeta_regular(const RootSystem& rs, const RootPerm& p, int d);
/* Orders of regular elements, by running over all of W. */
std::set<int> regular_numbers_by_enumeration(const RootSystem& rs, std::uint64_t bound = kDefaultWeylBound);

/* Generic vector sum_j zeta_d^{-j} w^j c in the zeta_d-eigenspace of w (w^d = 1), root coordinates. */
CartanVector eigenvector(const RootSystem& rs, const RootPerm& w, int d, const IVec& c);

struct StabilizerReport {
    int order = 0;
    OrthAut generator;
    Cyc generator_eigenvalue;
    bool generator_is_regular = false;
    bool cyclic = false;
    int conductor = 1;
    std::vector<LineIsometry> elements;
};

StabilizerReport line_stabilizer(const RootSystem& rs, const CartanVector& x, bool include_outer);

struct Witness {
    CartanVector x;
    OrthAut w;
    int d = 0;
    std::uint64_t seed = 0;
    std::uint64_t words_tried = 0;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultWitnessBudget = 1000000;

Witness regular_witness(const LieType& t, int d, std::uint64_t seed = 1,
                        std::uint64_t budget = kDefaultWitnessBudget);
Witness regular_witness(const RootSystem& rs, int d, std::uint64_t seed = 1,
                        std::uint64_t budget = kDefaultWitnessBudget);

struct SettledOrder {
    int d = 0;               // regular number used to build the witness
    int stabilizer = 0;      // measured order of Stab_W([x])
    CartanVector x;
    std::string method;      // "enumeration" or "witness search"
};

struct StabilizerOrders {
    LieType type;
    std::set<int> computed;
    std::set<int> tabulated;
    std::set<int> ground_truth;
    std::vector<SettledOrder> settled;
    std::vector<std::string> discrepancies;
    std::string method;
};

/* settle: measure the true stabilizer for every regular number (by enumeration when |W| fits the bound). */
StabilizerOrders stabilizer_orders(const LieType& t, bool settle, std::uint64_t seed = 1,
                                   std::uint64_t bound = kDefaultWeylBound);

} // namespace lieaut
