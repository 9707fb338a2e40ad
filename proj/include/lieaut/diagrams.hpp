#pragma once

#include "lieaut/root_system.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lieaut {

/* Nodes are numbered from 1 as in Bourbaki (node 2 of G2 is the short one). */
struct MarkedDiagram {
    LieType type;
    std::set<int> marked;

    static MarkedDiagram grassmannian(const LieType& t, int node);
    bool is_grassmannian() const { return marked.size() == 1; }
    int node() const;
    std::string str() const;
};

/* G/P_S for the nodes S: "G(3,7)", "OG(5,10)+", "IG(4,12)", "E6/P2,6", ... */
std::string homogeneous_name(const LieType& t, const std::set<int>& s);
/* #positive roots with a nonzero coefficient on S. */
int homogeneous_dim(const LieType& t, const std::set<int>& s);

/* Isomorphic presentation with a long marked node, when one exists (C_n/P_1, B_n/P_n, G2/P2). */
std::optional<MarkedDiagram> long_identification(const MarkedDiagram& x);
bool is_long_type(const MarkedDiagram& x);
/* C_n/P_k with 1 < k < n, F4/P3, F4/P4. */
bool is_short_curated(const MarkedDiagram& x);

struct HilbComponent {
    std::set<int> parameter_nodes;
    std::vector<int> chain;          // marked node first
    bool extendable = false;
    bool homogeneous = true;
    int dim = 0;
    std::string name;
    std::string citation;
    std::vector<int> exchanged_with; // indices of components related by a diagram automorphism
};

/* Presentation actually used for the combinatorics (the long identification if there is one). */
MarkedDiagram working_diagram(const MarkedDiagram& x);

/* Marked A_d chains from the marked node using simple bonds only. */
std::vector<std::vector<int>> marked_chains(const MarkedDiagram& x, int d);

std::vector<HilbComponent> hilb_linear(const MarkedDiagram& x, int d);
int max_linear_dim(const MarkedDiagram& x);

enum class UEKind { Linear, Quadric };

struct UEVerdict {
    UEKind kind = UEKind::Linear;
    bool applicable = true;
    bool holds = false;
    std::optional<HilbComponent> witness_component;
    std::string witness_family;
    std::string reason;
};

UEVerdict ue_check(const MarkedDiagram& x, UEKind kind);

bool in_omega2(const MarkedDiagram& x);

struct StrategyReport {
    MarkedDiagram x;
    std::string name;
    std::string omega;                // "Omega1" or "Omega2"
    int m = 0;                        // maximal linear (Omega1) or quadric (Omega2) dimension
    bool n_nonempty = false;
    bool possibly = false;            // nonemptiness not decided (F4 quadric rows)
    std::string reason;
    std::vector<int> nonextendable_dims;
    std::vector<HilbComponent> hilb;  // Hilb of maximal linear spaces (Omega1)
    std::string hilb_quadric;         // Hilb of maximal quadrics (Omega2 rows)
    std::string table_row;            // id of the matching curated row, "" if none
    std::string table_cite;
    std::string lifting;
    std::vector<std::string> notes;
};

StrategyReport section_strategy_report(const MarkedDiagram& x);

struct FiberComponent {
    LieType type;
    std::vector<int> nodes;   // parent node of each local node, local Bourbaki order
    std::set<int> marked;     // local node numbers
};

struct TitsFiber {
    std::vector<FiberComponent> components;
    std::string str() const;
};

TitsFiber tits_fiber(const LieType& t, const std::set<int>& s, const std::set<int>& s2);

/* All generalized Grassmannians of the given type. */
std::vector<MarkedDiagram> grassmannians(const LieType& t);
/* Every legal type with rank in [lo, hi]. */
std::vector<LieType> all_types(int lo, int hi);

/* Node permutations (1-based values) of the Dynkin diagram. */
std::vector<std::vector<int>> diagram_symmetries(const LieType& t);
bool equivalent_under_symmetry(const LieType& t, int node_a, const std::set<int>& sa, int node_b,
                               const std::set<int>& sb);

} // namespace lieaut
