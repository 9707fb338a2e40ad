#pragma once

#include "lieaut/mobius.hpp"

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace lieaut {

struct JordanFamily {
    char base = 'R';  // R, C, H or O
    int n = 3;

    void validate() const;
    std::string str() const;
    /* Rows of the Hermitian Jordan algebra table: algebra, ambient, group, X. */
    std::string algebra() const;
    std::string ambient() const;
    std::string group() const;
    std::string variety() const;
    std::string citation() const;
};

struct PencilConfig {
    std::vector<Cyc> spectrum;
    JordanFamily family;
};

bool smooth_pencil(const PencilConfig& p);
/* [-x_i : 1] */
std::vector<ProjPoint> branch_points(const PencilConfig& p);

/* Z_d, D_2m (order 2m), A4, S4, A5 */
struct GroupClass {
    char kind = 'Z';   // 'Z', 'D', 'T' (A4), 'O' (S4), 'I' (A5)
    int order = 1;

    static GroupClass parse(const std::string& s);
    std::string str() const;
    /* Sizes of the special orbits, each usable at most once. */
    std::vector<int> special_orbits() const;
    friend bool operator==(const GroupClass& a, const GroupClass& b) {
        return a.kind == b.kind && a.order == b.order;
    }
};

struct SymmetryReport {
    GroupClass group;
    std::vector<MobiusMap> elements;
    std::vector<MobiusMap> generators;
    std::map<int, int> element_orders;  // order -> count
    bool has_fixed_point = false;
    bool closed = false;
};

/* Full setwise stabilizer in PGL2 by three-point interpolation; prefilter only prunes candidates numerically. */
SymmetryReport classify_symmetry(const std::vector<ProjPoint>& points, bool prefilter = true);
GroupClass classify_group(const std::vector<MobiusMap>& elements, std::map<int, int>& element_orders);

struct NumericSymmetry {
    GroupClass group;
    std::vector<std::array<std::complex<double>, 4>> elements;
};
/* Floating-point mode, cross-ratio tolerance tol. */
NumericSymmetry classify_symmetry_numeric(const std::vector<std::complex<double>>& points, double tol = 1e-10);

struct Feasibility {
    bool feasible = false;
    std::vector<int> special;   // sizes of the special orbits used
    int generic = 0;            // number of free orbits
    int group_order = 1;
    std::string str() const;
};

Feasibility feasible_orders(const GroupClass& g, int n);
/* All decompositions, best first (fewest free orbits). */
std::vector<Feasibility> decompositions(const GroupClass& g, int n);

/* Standard model: group elements and special orbits. */
struct PlatonicModel {
    GroupClass group;
    std::vector<MobiusMap> elements;
    std::vector<std::vector<ProjPoint>> special;
};
const PlatonicModel& platonic_model(const GroupClass& g);

/* Exact spectrum whose branch points have symmetry group exactly g; std::domain_error when there is none. */
PencilConfig witness_config(const GroupClass& g, int n, char base = 'R');

struct PencilReport {
    bool smooth = false;
    std::vector<ProjPoint> points;
    SymmetryReport symmetry;
    bool unnatural = false;
    std::string kernel;
    std::string sequence;
};

PencilReport pencil_report(const PencilConfig& p);

} // namespace lieaut
