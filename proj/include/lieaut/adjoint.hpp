#pragma once

#include "lieaut/springer.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lieaut {

/* Rejection of an input that is well formed but outside the domain (non-smooth section, type C, ...). */
class DomainRejection : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class NilpotentTag { None, SingleRoot, A2Single, A2Sum };

NilpotentTag parse_nilpotent(const std::string& s);
std::string nilpotent_str(NilpotentTag t);

/*
 * x = x_s + x_n with x_n given by a normal-form tag. Roots of the tag are parent positive-root
 * indices; when empty they are read off from the roots vanishing on x_s.
 */
struct AdjointElement {
    LieType type;
    CartanVector x_s;
    NilpotentTag nilpotent = NilpotentTag::None;
    std::vector<int> roots;
};

/* Product of alpha(x_s) over all long roots. */
Cyc tevelev_eval(const RootSystem& rs, const CartanVector& x_s);

struct CaseInfo {
    int label = 0;
    std::vector<int> vanishing;       // positive roots vanishing on x_s, by height
    std::vector<int> nilpotent_roots; // root spaces carrying x_n
};

CaseInfo classify_case(const AdjointElement& e);

struct PerpSystem {
    std::vector<IVec> simple;  // simple roots of R-perp in parent root coordinates
    RootSystem rs;
    std::string type;
    CartanVector x_perp;       // x_s restricted to R-perp, in its weight coordinates
};

PerpSystem perp_root_system(const AdjointElement& e, const CaseInfo& c);

struct Aut0Shape {
    std::string shape;         // as in the table, e.g. "T_{<a_3,a_4> perp} x| A3"
    int torus_dim = 0;
    std::string factor;        // "", "A2", "Ga", "A3", "U3", "U2"
    int factor_dim = 0;        // dimension of the part not in the torus
    int epsilon = 0;
    int dim = 0;
};

Aut0Shape aut0_shape(const LieType& t, int case_label);
/* dim n_g(C x) from the root spaces of the normal form: rank + 2|Z| for semisimple x, etc. */
int normalizer_dim(const RootSystem& rs, const CaseInfo& c);

struct DxGroups {
    std::string B_x = "1";
    std::string C_x = "1";
    std::string B_x_search = "1";
    std::string C_x_conditions = "1";
    std::string C_x_search = "1";
};

/* B_x from the equal-value condition on the W-perp orbit of simple pairs; C_x by the listed conditions. */
DxGroups d_x_group(const AdjointElement& e, const CaseInfo& c, const PerpSystem& p, int stab_order);

/* Z2 iff a1(x) = a2(x) for some W-perp conjugate of the simple pair of R-perp = A2. */
std::string b_x_by_condition(const PerpSystem& p);
/* Group of the diagram automorphisms of the type that fix [x], computed by the outer-isometry search. */
std::string outer_quotient_by_search(const RootSystem& rs, const CartanVector& x);
std::string c_x_by_conditions(const RootSystem& rs, const CartanVector& x);

/* Elements of W(F4) swapping a3 <-> a4 and a1 <-> a1+3a2+4a3+2a4. */
std::vector<OrthAut> f4_outer_sigma();
/* The word s2 s3 s2 s4 s3 s2 (1-based nodes), composed right to left. */
OrthAut f4_sigma_from_word();

struct AutHxReport {
    LieType type;
    bool smooth = false;
    Cyc tevelev;
    CaseInfo info;
    std::string nilpotent;
    Aut0Shape aut0;
    std::string perp_type;
    int stab_order = 0;
    int stab_full = 0;             // |Stab_W([x_s])| in the whole Weyl group
    OrthAut stab_generator;        // generator of Stab_{W-perp}([x_s]), in R-perp
    DxGroups dx;
    std::string D_x;
    std::string decomposition;
    std::string table_row;         // citation of the matching row
    std::set<int> table_orders;
    std::vector<std::string> table_dx;
    std::string caveat;
    std::vector<std::string> discrepancies;
};

AutHxReport aut_report(const AdjointElement& e);

/* Normal-form x_s of the given case with generic values; seed picks the values. */
AdjointElement normal_form(const LieType& t, int case_label, std::uint64_t seed = 1);
/* x_s = eigenvector of a regular element of R-perp of order d, lifted to h, for the given case. */
AdjointElement normal_form_with_order(const LieType& t, int case_label, int d, std::uint64_t seed = 1);

} // namespace lieaut
