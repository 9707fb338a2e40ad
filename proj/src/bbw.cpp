#include "lieaut/bbw.hpp"

#include "lieaut/curated.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieaut {

std::string BottVerdict::str(const RootSystem& rs) const {
    if (acyclic) {
        std::string r;
        const IVec& c = rs.root(singular_root);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            if (!r.empty()) r += "+";
            if (c[i] != 1) r += std::to_string(c[i]);
            r += "a" + std::to_string(i + 1);
        }
        return "acyclic (lambda+rho orthogonal to " + r + ")";
    }
    return "H^" + std::to_string(degree) + " = V(" + weight_str(dominant) + ")";
}

namespace {

int coroot_pairing(const RootSystem& rs, int root, const IVec& mu) {
    IVec c = rs.coroot(root);
    int s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += c[j] * mu[j];
    return s;
}

} // namespace

BottVerdict is_acyclic(const RootSystem& rs, const IVec& lambda) {
    if ((int)lambda.size() != rs.rank()) throw std::invalid_argument("weight has wrong length");
    BottVerdict v;
    IVec mu = lambda;
    for (int& x : mu) x += 1;
    int negative = 0;
    for (int i = 0; i < rs.num_positive(); ++i) {
        int p = coroot_pairing(rs, i, mu);
        if (p == 0 && v.singular_root < 0) v.singular_root = i;
        if (p < 0) ++negative;
    }
    if (v.singular_root >= 0) {
        v.acyclic = true;
        return v;
    }
    int steps = 0;
    for (;;) {
        int i = 0;
        while (i < rs.rank() && mu[i] > 0) ++i;
        if (i == rs.rank()) break;
        int a = mu[i];
        for (int k = 0; k < rs.rank(); ++k) mu[k] -= a * rs.cartan()[i][k];
        ++steps;
    }
    if (steps != negative) throw std::logic_error("Bott: length mismatch");
    v.degree = steps;
    v.dominant = mu;
    for (int& x : v.dominant) x -= 1;
    return v;
}

mpz_class weyl_dimension(const RootSystem& rs, const IVec& lambda) {
    IVec mu = lambda;
    for (int& x : mu) x += 1;
    IVec rho(rs.rank(), 1);
    Rational d = 1;
    for (int i = 0; i < rs.num_positive(); ++i) d *= Rational(coroot_pairing(rs, i, mu), coroot_pairing(rs, i, rho));
    d.canonicalize();
    if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not integral");
    return d.get_num();
}

std::vector<IVec> symplectic_wedge_weights(int k, int q) {
    if (k < 4 || k % 2) throw std::domain_error("symplectic wedge weights need k even, k >= 4");
    if (q < 1 || q > k + 2) throw std::domain_error("q must lie in 1..k+2");
    int h = k / 2, n = 3 * h;
    int r = q <= h + 1 ? q : k + 2 - q;
    std::vector<IVec> out;
    for (int p = 0; 2 * p <= r; ++p) {
        IVec w(n, 0);
        w[k + (r - 2 * p) - 2] += 1;   // omega_{k+r-2p-1}
        w[k - 2] -= q + 1;             // -(q+1) omega_{k-1}
        out.push_back(w);
    }
    return out;
}

namespace {

std::set<int> symmetric_image(const std::set<int>& s, const std::vector<int>& perm) {
    std::set<int> out;
    for (int v : s) out.insert(perm[v - 1]);
    return out;
}

const curated::Record* quadric_row(const MarkedDiagram& x, std::set<int>& hilb) {
    for (const auto* r : curated::table("quadric")) {
        LieType t{curated::get(*r, "family")[0], (int)std::stol(curated::get(*r, "rank"))};
        if (!(t == x.type)) continue;
        int node = (int)std::stol(curated::get(*r, "node"));
        for (const auto& s : diagram_symmetries(t)) {
            if (s[node - 1] != x.node()) continue;
            auto sets = curated::eval_node_sets(curated::get(*r, "hilb"), {});
            hilb = curated::has(*r, "hilb_family") ? sets.at(0) : symmetric_image(sets.at(0), s);
            return r;
        }
    }
    return nullptr;
}

} // namespace

BundleCaseSpec bundle_case(const MarkedDiagram& x, UEKind kind) {
    if (!x.is_grassmannian()) throw std::invalid_argument("bundle_case needs a generalized Grassmannian");
    BundleCaseSpec spec;
    spec.x = x;
    spec.kind = kind;
    if (kind == UEKind::Quadric) {
        std::set<int> hilb;
        const curated::Record* r = quadric_row(x, hilb);
        if (!r) throw std::domain_error(x.str() + " has no row among the non-extendable quadric families");
        spec.label = curated::get(*r, "id");
        spec.citation = curated::get(*r, "cite");
        spec.components = {hilb};
        if (curated::has(*r, "hilb_family")) {
            // quadrics of F4/P4 come from the eight-dimensional quadrics of E6/P1
            spec.complex = ComplexKind::EagonNorthcott;
            spec.group = {curated::get(*r, "hilb_family")[0], (int)std::stol(curated::get(*r, "hilb_rank"))};
            spec.fiber_node = 1;
        } else {
            spec.group = x.type;
            spec.fiber_node = x.node();
        }
        return spec;
    }
    StrategyReport rep = section_strategy_report(x);
    MarkedDiagram w = working_diagram(x);
    spec.label = rep.table_row.empty() ? rep.name : rep.table_row;
    spec.citation = rep.table_cite;
    spec.group = w.type;
    spec.fiber_node = w.node();
    for (const auto& c : rep.hilb)
        if (c.homogeneous) spec.components.push_back(c.parameter_nodes);
    if (spec.components.empty()) throw std::domain_error(x.str() + " has no homogeneous Hilbert scheme component");
    return spec;
}

namespace {

Rational height_in_roots(const RootSystem& rs, const IVec& w) {
    CartanVector v;
    v.basis = Basis::Weights;
    for (int x : w) v.coords.push_back(Cyc(x));
    Rational h = 0;
    for (const auto& c : rs.to_roots(v).coords) h += c.rational();
    return h;
}

void add_terms(ComponentVerdict& cv, const RootSystem& rs, const Levi& levi, const Character& ch, int wedge,
               int degree, long copies) {
    auto parts = levi.decompose(::lieaut::wedge(ch, wedge));
    if (parts.size() > 1)
        cv.notes.push_back("wedge power " + std::to_string(wedge) + " splits into " + std::to_string(parts.size()) +
                           " irreducible summands");
    for (const auto& [hw, m] : parts) {
        BundleTerm t;
        t.degree = degree;
        t.wedge = wedge;
        t.multiplicity = m * copies;
        t.weight = hw;
        t.bott = is_acyclic(rs, hw);
        cv.terms.push_back(t);
    }
}

} // namespace

NonemptinessVerdict nonemptiness_verdict(const BundleCaseSpec& spec) {
    NonemptinessVerdict out;
    out.spec = spec;
    const RootSystem& rs = RootSystem::cached(spec.group);
    for (const auto& comp : spec.components) {
        ComponentVerdict cv;
        cv.parabolic = comp;
        cv.name = homogeneous_name(spec.group, comp);
        std::set<int> lnodes;
        for (int i = 0; i < rs.rank(); ++i)
            if (!comp.count(i + 1)) lnodes.insert(i);
        Levi levi(rs, lnodes);
        IVec omega(rs.rank(), 0);
        omega[spec.fiber_node - 1] = 1;
        Character fiber = levi.irreducible(omega);
        cv.rank = (int)dimension(fiber);
        for (const auto& [w, m] : fiber)
            for (long i = 0; i < m; ++i) cv.fiber_weights.push_back(w);
        std::stable_sort(cv.fiber_weights.begin(), cv.fiber_weights.end(), [&](const IVec& a, const IVec& b) {
            return height_in_roots(rs, a) > height_in_roots(rs, b);
        });
        // E is the dual of the fiber for Koszul; S^vee for Eagon-Northcott
        Character e = dual(fiber);
        BottVerdict trivial = is_acyclic(rs, IVec(rs.rank(), 0));
        cv.h0_trivial = !trivial.acyclic && trivial.degree == 0 && weyl_dimension(rs, trivial.dominant) == 1;
        if (spec.complex == ComplexKind::Koszul) {
            for (int q = 1; q <= cv.rank; ++q) add_terms(cv, rs, levi, e, q, q, 1);
        } else {
            for (int i = 2; i <= cv.rank; ++i) add_terms(cv, rs, levi, e, i, i - 1, i - 1);
        }
        cv.certified = cv.h0_trivial;
        cv.constant_survives = cv.h0_trivial;
        for (const auto& t : cv.terms) {
            cv.certified = cv.certified && t.bott.acyclic;
            // only classes of total degree -1 can hit H^0(O)
            if (!t.bott.acyclic && t.bott.degree == t.degree - 1) cv.constant_survives = false;
        }
        out.components.push_back(cv);
    }
    for (const auto& cv : out.components) {
        out.certified = out.certified || cv.certified;
        out.nonempty = out.nonempty || cv.constant_survives;
    }
    std::string what = spec.kind == UEKind::Linear ? "Hilb_P^m(H_x)" : "Hilb_Q^l(H_x)";
    std::string bad;
    for (const auto& cv : out.components)
        for (const auto& t : cv.terms)
            if (!t.bott.acyclic)
                bad += " degree " + std::to_string(t.degree) + " term " + weight_str(t.weight) + " has " +
                       t.bott.str(rs) + ";";
    if (out.certified) {
        out.conclusion = "every positive-degree term is acyclic, H^0(O_Z) = C, hence " + what + " is nonempty";
    } else if (out.nonempty) {
        out.conclusion = "not every term is acyclic:" + bad +
                         " no term has cohomology in total degree -1, so H^0(O) survives and " + what +
                         " is nonempty";
    } else {
        out.conclusion = "not certified:" + bad;
    }
    return out;
}

} // namespace lieaut
