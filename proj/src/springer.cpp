#include "lieaut/springer.hpp"

#include "lieaut/curated.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace lieaut {

int a_of(const std::vector<int>& degrees, int d) {
    int a = 0;
    for (int x : degrees)
        if (x % d != 0) ++a;
    return a;
}

std::set<int> regular_numbers_from_degrees(const std::vector<int>& degrees) {
    std::set<int> out;
    int top = *std::max_element(degrees.begin(), degrees.end());
    for (int d = 2; d <= top; ++d) {
        int nd = 0, nc = 0;
        for (int x : degrees) {
            if (x % d == 0) ++nd;
            if ((x - 2) % d == 0) ++nc;
        }
        if (nd == nc) out.insert(d);
    }
    return out;
}

std::set<int> prec_maximal(const std::vector<int>& degrees, const std::set<int>& regular) {
    std::set<int> out;
    for (int m : regular) {
        bool maximal = true;
        for (int m2 : regular)
            if (m2 != m && m2 % m == 0 && a_of(degrees, m) == a_of(degrees, m2)) maximal = false;
        if (maximal) out.insert(m);
    }
    return out;
}

RegularData regular_data(const LieType& t) {
    RootSystem rs = RootSystem::build(t);
    RegularData r;
    r.type = t;
    r.degrees = degrees(rs);
    for (int d : r.degrees) r.codegrees.push_back(d - 2);
    r.regular_numbers = regular_numbers_from_degrees(r.degrees);
    for (int d : r.regular_numbers) r.a[d] = a_of(r.degrees, d);
    r.maximal_orders = prec_maximal(r.degrees, r.regular_numbers);
    return r;
}

std::set<int> regular_numbers(const LieType& t) {
    return regular_data(t).regular_numbers;
}

namespace {

/* Integer polynomial of degree < d, tested for divisibility by Phi_d. */
bool nonzero_mod_phi(std::vector<long> p, int d) {
    const std::vector<long>& phi = cyclotomic_polynomial(d);
    int deg = (int)phi.size() - 1;
    for (int i = (int)p.size() - 1; i >= deg; --i) {
        long c = p[i];
        if (!c) continue;
        for (int j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
    }
    for (int i = 0; i < deg && i < (int)p.size(); ++i)
        if (p[i]) return true;
    return false;
}

RootPerm perm_power(const RootPerm& p, int e) {
    RootPerm r(p.size());
    std::iota(r.begin(), r.end(), 0);
    RootPerm base = p;
    while (e > 0) {
        if (e & 1) {
            RootPerm t(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) t[k] = base[r[k]];
            r.swap(t);
        }
        RootPerm t(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) t[k] = base[base[k]];
        base.swap(t);
        e >>= 1;
    }
    return r;
}

} // namespace

bool zeta_regular(const RootSystem& rs, const RootPerm& p, int d) {
    int nr = rs.num_roots();
    int r = rs.rank();
    std::vector<char> seen(nr, 0);
    for (int k = 0; k < nr; ++k) {
        if (seen[k]) continue;
        std::vector<int> cyc;
        for (int j = k; !seen[j]; j = p[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        int s = (int)cyc.size();
        if (s % d != 0) return false;
        // the root cyc[0] is nonzero on the eigenspace iff sum_i zeta^{-i} w^{-i} alpha != 0
        bool alive = false;
        for (int t = 0; t < r && !alive; ++t) {
            std::vector<long> poly(d, 0);
            for (int i = 0; i < s; ++i) poly[i % d] += rs.root(cyc[(s - i) % s])[t];
            alive = nonzero_mod_phi(poly, d);
        }
        if (!alive) return false;
    }
    return true;
}

std::set<int> regular_numbers_by_enumeration(const RootSystem& rs, std::uint64_t bound) {
    std::set<int> out;
    int nr = rs.num_roots();
    std::vector<char> seen(nr);
    for_each_weyl(rs, false, bound, [&](const RootPerm& p) {
        // a regular element of order d has every root cycle of length exactly d
        std::fill(seen.begin(), seen.end(), 0);
        int len0 = 0;
        for (int k = 0; k < nr; ++k) {
            if (seen[k]) continue;
            int len = 0;
            for (int j = k; !seen[j]; j = p[j]) {
                seen[j] = 1;
                ++len;
            }
            if (!len0) len0 = len;
            if (len != len0) return;
        }
        if (len0 < 2 || out.count(len0)) return;
        if (zeta_regular(rs, p, len0)) out.insert(len0);
    });
    return out;
}

CartanVector eigenvector(const RootSystem& rs, const RootPerm& w, int d, const IVec& c) {
    OrthAut g = from_permutation(rs, w);
    IMat m = aut_matrix(rs, g);
    int r = rs.rank();
    std::vector<std::vector<Rational>> coef(r, std::vector<Rational>(d, Rational(0)));
    IVec v = c;
    for (int j = 0; j < d; ++j) {
        int e = (d - j % d) % d;
        for (int t = 0; t < r; ++t) coef[t][e] += v[t];
        IVec nv(r, 0);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) nv[i] += m[i][k] * v[k];
        v.swap(nv);
    }
    CartanVector x;
    x.basis = Basis::Roots;
    for (int t = 0; t < r; ++t) x.coords.push_back(Cyc(d, coef[t]));
    return x;
}

StabilizerReport line_stabilizer(const RootSystem& rs, const CartanVector& x, bool include_outer) {
    bool nonzero = std::any_of(x.coords.begin(), x.coords.end(), [](const Cyc& c) { return !c.is_zero(); });
    if (!nonzero) throw std::invalid_argument("line_stabilizer: x = 0");
    StabilizerReport rep;
    rep.elements = line_isometries(rs, x, include_outer);
    rep.order = (int)rep.elements.size();
    rep.conductor = 1;
    for (const auto& c : x.coords) rep.conductor = lcm_conductor(rep.conductor, c.conductor());
    int best = -1, best_ord = 0;
    for (std::size_t i = 0; i < rep.elements.size(); ++i) {
        int o = aut_order(rs, rep.elements[i].g);
        if (o > best_ord) {
            best_ord = o;
            best = (int)i;
        }
    }
    rep.generator = rep.elements[best].g;
    rep.generator_eigenvalue = rep.elements[best].xi;
    rep.cyclic = best_ord == rep.order;
    if (!rep.generator.is_outer && best_ord >= 2)
        rep.generator_is_regular = zeta_regular(rs, root_permutation(rs, rep.generator), best_ord);
    else
        rep.generator_is_regular = best_ord == 1 && rs.is_regular(x);
    return rep;
}

Witness regular_witness(const LieType& t, int d, std::uint64_t seed, std::uint64_t budget) {
    return regular_witness(RootSystem::build(t), d, seed, budget);
}

Witness regular_witness(const RootSystem& rs, int d, std::uint64_t seed, std::uint64_t budget) {
    std::vector<int> degs = degrees(rs);
    std::set<int> reg = regular_numbers_from_degrees(degs);
    if (!reg.count(d))
        throw std::invalid_argument("regular_witness: " + std::to_string(d) + " is not a regular number of " +
                                    rs.type_str());
    std::mt19937_64 rng(seed);
    int nr = rs.num_roots();
    int r = rs.rank();
    int maxlen = 2 * rs.num_positive();
    std::uniform_int_distribution<int> node(0, r - 1);
    std::uniform_int_distribution<int> len(1, maxlen);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    RootPerm p(nr), q(nr);
    for (std::uint64_t tries = 1; tries <= budget; ++tries) {
        std::iota(p.begin(), p.end(), 0);
        int L = len(rng);
        for (int s = 0; s < L; ++s) {
            const RootPerm& sp = rs.reflection_perm(node(rng));
            for (int k = 0; k < nr; ++k) q[k] = sp[p[k]];
            p.swap(q);
        }
        int o = perm_order(p);
        if (o % d != 0) continue;
        RootPerm u = perm_power(p, o / d);
        if (!zeta_regular(rs, u, d)) continue;
        for (int attempt = 0; attempt < 64; ++attempt) {
            IVec c(r);
            for (auto& e : c) e = coef(rng);
            CartanVector x = eigenvector(rs, u, d, c);
            if (!rs.is_regular(x)) continue;
            Witness w;
            w.x = x;
            w.w = from_permutation(rs, u);
            w.d = d;
            w.seed = seed;
            w.words_tried = tries;
            return w;
        }
    }
    throw BudgetExhausted("regular_witness: no regular element of order " + std::to_string(d) + " in " +
                          rs.type_str() + " after " + std::to_string(budget) + " words (seed " +
                          std::to_string(seed) + ")");
}

namespace {

/* First element of each order d in E# that is zeta_d-regular, found by walking W. */
std::map<int, RootPerm> regular_elements_by_enumeration(const RootSystem& rs, const std::set<int>& wanted,
                                                        std::uint64_t bound) {
    std::map<int, RootPerm> found;
    int nr = rs.num_roots();
    std::vector<char> seen(nr);
    for_each_weyl(rs, false, bound, [&](const RootPerm& p) {
        if (found.size() == wanted.size()) return;
        std::fill(seen.begin(), seen.end(), 0);
        int len0 = 0;
        for (int k = 0; k < nr; ++k) {
            if (seen[k]) continue;
            int len = 0;
            for (int j = k; !seen[j]; j = p[j]) {
                seen[j] = 1;
                ++len;
            }
            if (!len0) len0 = len;
            if (len != len0) return;
        }
        if (!wanted.count(len0) || found.count(len0)) return;
        if (zeta_regular(rs, p, len0)) found[len0] = p;
    });
    return found;
}

std::string set_str(const std::set<int>& s) {
    std::string out;
    for (int d : s) out += (out.empty() ? "" : ",") + std::to_string(d);
    return out.empty() ? "-" : out;
}

} // namespace

StabilizerOrders stabilizer_orders(const LieType& t, bool settle, std::uint64_t seed, std::uint64_t bound) {
    RootSystem rs = RootSystem::build(t);
    RegularData rd = regular_data(t);
    StabilizerOrders out;
    out.type = t;
    out.computed = rd.maximal_orders;
    out.tabulated = curated::stabilizer_orders_row(t);
    for (int d : out.computed)
        if (!out.tabulated.count(d))
            out.discrepancies.push_back("d=" + std::to_string(d) + " is maximal under the divisibility order but absent from the tabulated row");
    for (int d : out.tabulated)
        if (!out.computed.count(d))
            out.discrepancies.push_back("d=" + std::to_string(d) + " is tabulated but not maximal under the divisibility order");
    if (!settle) return out;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    bool enumerable = weyl_order(rs) <= bound;
    out.method = enumerable ? "enumeration" : "witness search";
    std::map<int, RootPerm> elems;
    if (enumerable) {
        elems = regular_elements_by_enumeration(rs, rd.regular_numbers, bound);
    } else {
        for (int d : rd.regular_numbers) {
            Witness w = regular_witness(rs, d, seed + d);
            elems[d] = root_permutation(rs, w.w);
        }
    }
    for (int d : rd.regular_numbers) {
        auto it = elems.find(d);
        if (it == elems.end()) {
            out.discrepancies.push_back("no regular element of order " + std::to_string(d) + " found");
            continue;
        }
        CartanVector x;
        for (int attempt = 0; attempt < 256; ++attempt) {
            IVec c(rs.rank());
            for (auto& e : c) e = coef(rng);
            x = eigenvector(rs, it->second, d, c);
            if (rs.is_regular(x)) break;
        }
        StabilizerReport st = line_stabilizer(rs, x, false);
        SettledOrder so;
        so.d = d;
        so.stabilizer = st.order;
        so.x = x;
        so.method = out.method;
        out.settled.push_back(so);
        out.ground_truth.insert(st.order);
    }
    out.ground_truth.erase(1);
    if (out.ground_truth != out.computed)
        out.discrepancies.push_back("measured stabilizer orders {" + set_str(out.ground_truth) +
                                    "} differ from the maximal elements {" + set_str(out.computed) + "}");
    if (out.ground_truth != out.tabulated)
        out.discrepancies.push_back("measured stabilizer orders {" + set_str(out.ground_truth) +
                                    "} differ from the tabulated row {" + set_str(out.tabulated) + "}");
    return out;
}

} // namespace lieaut
