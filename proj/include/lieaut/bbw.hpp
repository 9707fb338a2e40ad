#pragma once

#include "lieaut/diagrams.hpp"
#include "lieaut/levi.hpp"

#include <gmpxx.h>

#include <set>
#include <string>
#include <vector>

namespace lieaut {

struct BottVerdict {
    bool acyclic = false;
    int degree = 0;          // the only nonzero cohomology degree when not acyclic
    IVec dominant;           // w.(lambda) when not acyclic
    int singular_root = -1;  // positive root with <lambda+rho, beta^vee> = 0
    std::string str(const RootSystem& rs) const;
};

/* Bott-Borel-Weil for the irreducible bundle of highest weight lambda (fundamental-weight coordinates). */
BottVerdict is_acyclic(const RootSystem& rs, const IVec& lambda);
mpz_class weyl_dimension(const RootSystem& rs, const IVec& lambda);

/* Highest weights of the summands of the q-th wedge power on IG(k-1,3k), k = 2h even, as weights of C_{3h}. */
std::vector<IVec> symplectic_wedge_weights(int k, int q);

enum class ComplexKind { Koszul, EagonNorthcott };

struct BundleCaseSpec {
    std::string label;
    MarkedDiagram x;
    UEKind kind = UEKind::Linear;
    ComplexKind complex = ComplexKind::Koszul;
    LieType group;                         // where the complex lives
    int fiber_node = 0;                    // omega_i spanning the fiber (1-based)
    std::vector<std::set<int>> components; // parabolic nodes of each Hilb component
    std::string citation;
};

BundleCaseSpec bundle_case(const MarkedDiagram& x, UEKind kind);

struct BundleTerm {
    int degree = 0;      // position in the resolution
    int wedge = 0;
    long multiplicity = 1;
    IVec weight;
    BottVerdict bott;
};

struct ComponentVerdict {
    std::set<int> parabolic;
    std::string name;
    int rank = 0;                          // rank of the bundle
    std::vector<IVec> fiber_weights;       // weights of E^vee (or S), highest first
    std::vector<BundleTerm> terms;
    bool h0_trivial = false;
    bool certified = false;          // every positive-degree term acyclic
    bool constant_survives = false;  // no term with H^{p-1} at position p
    std::vector<std::string> notes;
};

struct NonemptinessVerdict {
    BundleCaseSpec spec;
    std::vector<ComponentVerdict> components;
    bool certified = false;
    bool nonempty = false;
    std::string conclusion;
};

NonemptinessVerdict nonemptiness_verdict(const BundleCaseSpec& spec);

} // namespace lieaut
