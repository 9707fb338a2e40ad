#include "lieaut/adjoint.hpp"

#include "lieaut/curated.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lieaut {

NilpotentTag parse_nilpotent(const std::string& s) {
    if (s == "none") return NilpotentTag::None;
    if (s == "beta" || s == "single") return NilpotentTag::SingleRoot;
    if (s == "a2-single") return NilpotentTag::A2Single;
    if (s == "a2-sum") return NilpotentTag::A2Sum;
    throw std::invalid_argument("unknown nilpotent tag '" + s + "' (none|beta|a2-single|a2-sum)");
}

std::string nilpotent_str(NilpotentTag t) {
    switch (t) {
    case NilpotentTag::None: return "none";
    case NilpotentTag::SingleRoot: return "beta";
    case NilpotentTag::A2Single: return "a2-single";
    case NilpotentTag::A2Sum: return "a2-sum";
    }
    return "?";
}

namespace {

std::string root_str(const IVec& c) {
    std::string r;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        if (!r.empty()) r += c[i] > 0 ? "+" : "-";
        else if (c[i] < 0) r += "-";
        if (std::abs(c[i]) != 1) r += std::to_string(std::abs(c[i]));
        r += "a" + std::to_string(i + 1);
    }
    return r;
}

std::vector<Cyc> values(const RootSystem& rs, const CartanVector& x) {
    std::vector<Cyc> bx = rs.gram_times(x);
    std::vector<Cyc> v(rs.num_roots());
    for (int k = 0; k < rs.num_positive(); ++k) {
        Cyc s;
        for (int i = 0; i < rs.rank(); ++i)
            if (rs.root(k)[i]) s += bx[i] * Rational(rs.root(k)[i]);
        v[k] = s;
        v[rs.negative(k)] = -s;
    }
    return v;
}

/* Positive roots orthogonal to every root in the list, and the simple system they form. */
std::vector<IVec> orthogonal_simple(const RootSystem& rs, const std::vector<int>& roots) {
    std::vector<int> pos;
    for (int k = 0; k < rs.num_positive(); ++k) {
        bool ok = true;
        for (int r : roots)
            if (rs.pair2(k, r) != 0) ok = false;
        if (ok) pos.push_back(k);
    }
    std::set<IVec> set;
    for (int k : pos) set.insert(rs.root(k));
    std::vector<IVec> simple;
    for (int k : pos) {
        bool decomposable = false;
        for (int a : pos) {
            IVec d = rs.root(k);
            for (int i = 0; i < rs.rank(); ++i) d[i] -= rs.root(a)[i];
            if (set.count(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(rs.root(k));
    }
    return simple;
}

std::string group_tag(long n) {
    switch (n) {
    case 1: return "1";
    case 2: return "Z2";
    case 3: return "Z3";
    case 6: return "S3";
    default: return "order " + std::to_string(n);
    }
}

} // namespace

Cyc tevelev_eval(const RootSystem& rs, const CartanVector& x_s) {
    std::vector<Cyc> v = values(rs, x_s);
    Cyc p(1);
    for (int k = 0; k < rs.num_roots(); ++k)
        if (rs.is_long(k)) p *= v[k];
    return p;
}

CaseInfo classify_case(const AdjointElement& e) {
    if (e.type.family == 'C') throw DomainRejection("type C excluded: the hyperplane section is a quadric");
    const RootSystem& rs = RootSystem::cached(e.type);
    if ((int)e.x_s.coords.size() != rs.rank()) throw std::invalid_argument("x_s has wrong length");
    std::vector<Cyc> v = values(rs, e.x_s);
    CaseInfo c;
    for (int k = 0; k < rs.num_positive(); ++k)
        if (v[k].is_zero()) c.vanishing.push_back(k);
    std::stable_sort(c.vanishing.begin(), c.vanishing.end(),
                     [&](int a, int b) { return rs.height(a) < rs.height(b); });
    for (int k : c.vanishing)
        if (rs.is_long(k)) throw DomainRejection("not smooth: the long root " + root_str(rs.root(k)) + " vanishes on x_s");
    const auto& z = c.vanishing;
    auto need = [&](const std::vector<int>& expected) {
        if (e.roots.empty()) {
            c.nilpotent_roots = expected;
            return;
        }
        std::vector<int> a = e.roots, b = expected;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw DomainRejection("nilpotent tag inconsistent with the roots vanishing on x_s");
        c.nilpotent_roots = expected;
    };
    if (z.empty()) {
        if (e.nilpotent != NilpotentTag::None) throw DomainRejection("x_s is regular, so x_n must be 0");
        c.label = 1;
        return c;
    }
    if (z.size() == 1) {
        if (e.nilpotent == NilpotentTag::None) {
            c.label = 2;
        } else if (e.nilpotent == NilpotentTag::SingleRoot) {
            need({z[0]});
            c.label = 3;
        } else {
            throw DomainRejection("nilpotent tag " + nilpotent_str(e.nilpotent) + " needs an A2 of vanishing roots");
        }
        return c;
    }
    bool a2 = false;
    if (z.size() == 3) {
        IVec s = rs.root(z[0]);
        for (int i = 0; i < rs.rank(); ++i) s[i] += rs.root(z[1])[i];
        a2 = s == rs.root(z[2]) && rs.pair2(z[0], z[1]) < 0;
    }
    if (!a2)
        throw DomainRejection("the " + std::to_string(z.size()) +
                              " short roots vanishing on x_s are neither one root nor an A2");
    switch (e.nilpotent) {
    case NilpotentTag::None: c.label = 4; break;
    case NilpotentTag::A2Single: need({z[2]}); c.label = 5; break;
    case NilpotentTag::A2Sum: need({z[0], z[1]}); c.label = 6; break;
    case NilpotentTag::SingleRoot:
        throw DomainRejection("nilpotent tag beta needs a single vanishing root");
    }
    return c;
}

PerpSystem perp_root_system(const AdjointElement& e, const CaseInfo& c) {
    const RootSystem& rs = RootSystem::cached(e.type);
    PerpSystem p;
    p.simple = orthogonal_simple(rs, c.vanishing);
    p.rs = RootSystem::subsystem(rs, p.simple);
    p.type = p.simple.empty() ? "trivial" : p.rs.type_str();
    p.x_perp.basis = Basis::Weights;
    for (const auto& g : p.simple) {
        int k = rs.find_root(g);
        p.x_perp.coords.push_back(rs.pairing(g, e.x_s) * (Rational(2) / rs.length2(k)));
    }
    return p;
}

Aut0Shape aut0_shape(const LieType& t, int label) {
    Aut0Shape s;
    std::string an = t.family == 'F' ? "a_4" : t.family == 'G' ? "a_2" : "a_n";
    switch (label) {
    case 1: s = {"T", t.rank, "", 0, 0, 0}; break;
    case 2: s = {"T_{" + an + " perp} x| A2", t.rank - 1, "A2", 3, 2, 0}; break;
    case 3: s = {"T_{" + an + " perp} x| Ga", t.rank - 1, "Ga", 1, 0, 0}; break;
    case 4: s = {"T_{<a_3,a_4> perp} x| A3", t.rank - 2, "A3", 8, 6, 0}; break;
    case 5: s = {"T_{(a_3+a_4) perp} x| U3", t.rank - 1, "U3", 3, 2, 0}; break;
    case 6: s = {"T_{<a_3,a_4> perp} x| U2", t.rank - 2, "U2", 2, 0, 0}; break;
    default: throw std::invalid_argument("case label must be 1..6");
    }
    s.dim = s.torus_dim + s.factor_dim;
    return s;
}

int normalizer_dim(const RootSystem& rs, const CaseInfo& c) {
    int r = rs.rank(), z = (int)c.vanishing.size();
    switch (c.label) {
    case 1:
    case 2:
    case 4: return r + 2 * z;          // h + g_alpha for alpha in +-Z
    case 3: return (r - 1) + 1;        // alpha^perp + g_beta
    case 5: return (r - 1) + 3;        // (a3+a4)^perp + g_a3 + g_a4 + g_(a3+a4)
    case 6: return (r - 2) + 1 + 1;    // <a3,a4>^perp + g_(a3+a4) + C x_n
    }
    return -1;
}

std::string outer_quotient_by_search(const RootSystem& rs, const CartanVector& x) {
    auto all = line_isometries(rs, x, true);
    long inner = std::count_if(all.begin(), all.end(), [](const LineIsometry& l) { return !l.g.is_outer; });
    return group_tag((long)all.size() / inner);
}

std::string c_x_by_conditions(const RootSystem& rs, const CartanVector& x) {
    const LieType& t = rs.lie_type();
    int n = t.rank;
    if ((t.family == 'D' && n % 2 == 1 && n >= 5) || (t.family == 'E' && n == 6)) return "Z2";
    std::vector<Cyc> v = values(rs, x);
    if (t.family == 'A' && n >= 2) {
        // coordinates t_j with alpha_j = e_j - e_{j+1}; symmetric spectrum <=> palindromic gaps in some order
        std::vector<Cyc> c(n + 1);
        for (int j = 0; j < n; ++j) c[j + 1] = c[j] - v[rs.simple_index(j)];
        Cyc mean;
        for (const auto& a : c) mean += a;
        mean *= Rational(2, n + 1);
        std::vector<Cyc> refl;
        for (const auto& a : c) refl.push_back(mean - a);
        std::sort(c.begin(), c.end());
        std::sort(refl.begin(), refl.end());
        return c == refl ? "Z2" : "1";
    }
    if (t.family != 'D') return "1";
    int nr = rs.num_roots();
    bool pair = false, triple = false;
    std::string target = "D" + std::to_string(n - 2);
    for (int a = 0; a < nr; ++a)
        for (int b = a + 1; b < nr; ++b) {
            if (rs.pair2(a, b) != 0 || v[a] != v[b]) continue;
            if (n == 4) {
                pair = true;
                for (int c = b + 1; c < nr && !triple; ++c)
                    if (rs.pair2(a, c) == 0 && rs.pair2(b, c) == 0 && v[c] == v[a]) triple = true;
            } else if (n % 2 == 0 && !pair) {
                auto s = orthogonal_simple(rs, {a < rs.num_positive() ? a : rs.negative(a),
                                                b < rs.num_positive() ? b : rs.negative(b)});
                if (RootSystem::subsystem(rs, s).type_str() == target) pair = true;
            }
        }
    if (triple) return "S3";
    return pair ? "Z2" : "1";
}

std::string b_x_by_condition(const PerpSystem& p) {
    if (p.rs.rank() != 2 || p.type != "A2") return "1";
    // W-perp orbit of the simple pair of R-perp = A2
    for (const auto& w : enumerate_weyl(p.rs, false)) {
        Cyc a = p.rs.pairing(p.rs.root(w.images[0]), p.x_perp);
        Cyc b = p.rs.pairing(p.rs.root(w.images[1]), p.x_perp);
        if (a == b) return "Z2";
    }
    return "1";
}

DxGroups d_x_group(const AdjointElement& e, const CaseInfo& c, const PerpSystem& p, int stab_order) {
    const RootSystem& rs = RootSystem::cached(e.type);
    DxGroups g;
    if (c.label >= 4) g.B_x = b_x_by_condition(p);
    long wz = 1;
    if (c.vanishing.size() == 1) wz = 2;
    if (c.vanishing.size() == 3) wz = 6;
    long full = (long)line_isometries(rs, e.x_s, false).size();
    g.B_x_search = group_tag(full / (wz * stab_order));
    char f = e.type.family;
    bool gamma = (f == 'A' && e.type.rank >= 2) || f == 'D' || (f == 'E' && e.type.rank == 6);
    if (c.label == 1 && gamma) {
        g.C_x_conditions = c_x_by_conditions(rs, e.x_s);
        g.C_x_search = outer_quotient_by_search(rs, e.x_s);
        g.C_x = g.C_x_conditions;
    }
    return g;
}

std::vector<OrthAut> f4_outer_sigma() {
    const RootSystem& rs = RootSystem::cached({'F', 4});
    IVec a1{1, 0, 0, 0}, a3{0, 0, 1, 0}, a4{0, 0, 0, 1}, beta{1, 3, 4, 2};
    int i1 = rs.find_root(a1), i3 = rs.find_root(a3), i4 = rs.find_root(a4), ib = rs.find_root(beta);
    // any such element fixes a1 + beta + 2(a3 + a4)
    CartanVector x;
    x.basis = Basis::Roots;
    for (int k = 0; k < 4; ++k) x.coords.push_back(Cyc(a1[k] + beta[k] + 2 * a3[k] + 2 * a4[k]));
    std::vector<OrthAut> out;
    for (const auto& g : search_line_isometries(rs, x, Cyc(1), false)) {
        RootPerm p = root_permutation(rs, g);
        if (p[i3] == i4 && p[i4] == i3 && p[i1] == ib && p[ib] == i1) out.push_back(g);
    }
    return out;
}

OrthAut f4_sigma_from_word() {
    return from_word(RootSystem::cached({'F', 4}), {1, 2, 1, 3, 2, 1});
}

namespace {

const curated::Record* table_row(const LieType& t, int label) {
    for (const auto* r : curated::table("adjoint")) {
        if (curated::get(*r, "family")[0] != t.family) continue;
        if (!curated::rank_matches(curated::get(*r, "ranks"), t.rank)) continue;
        if (std::stoi(curated::get(*r, "case")) == label) return r;
    }
    return nullptr;
}

std::vector<std::string> split_bar(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '|')) out.push_back(item);
    return out;
}

} // namespace

AutHxReport aut_report(const AdjointElement& e) {
    const RootSystem& rs = RootSystem::cached(e.type);
    AutHxReport rep;
    rep.type = e.type;
    rep.nilpotent = nilpotent_str(e.nilpotent);
    if (e.type.family == 'C') throw DomainRejection("type C excluded: the hyperplane section is a quadric");
    rep.tevelev = tevelev_eval(rs, e.x_s);
    rep.smooth = !rep.tevelev.is_zero();
    if (!rep.smooth) throw DomainRejection("not smooth: the product of the long roots vanishes at x_s");
    rep.info = classify_case(e);
    rep.aut0 = aut0_shape(e.type, rep.info.label);
    int ndim = normalizer_dim(rs, rep.info);
    if (ndim != rep.aut0.dim)
        rep.discrepancies.push_back("normalizer has dimension " + std::to_string(ndim) + ", shape gives " +
                                    std::to_string(rep.aut0.dim));
    PerpSystem p = perp_root_system(e, rep.info);
    rep.perp_type = p.type;
    StabilizerReport st = line_stabilizer(p.rs, p.x_perp, false);
    rep.stab_order = st.order;
    rep.stab_generator = st.generator;
    rep.dx = d_x_group(e, rep.info, p, st.order);
    rep.stab_full = (int)line_isometries(rs, e.x_s, false).size();
    if (rep.dx.B_x != rep.dx.B_x_search)
        rep.discrepancies.push_back("B_x is " + rep.dx.B_x + " by the equal-value condition, but |Stab_W([x_s])| = " +
                                    std::to_string(rep.stab_full) + " leaves an outer part " + rep.dx.B_x_search +
                                    " on R-perp");
    if (rep.dx.C_x_conditions != rep.dx.C_x_search)
        rep.discrepancies.push_back("C_x is " + rep.dx.C_x_conditions + " by the listed conditions but " +
                                    rep.dx.C_x_search + " by the outer-isometry search");
    rep.D_x = rep.dx.B_x != "1" ? rep.dx.B_x : rep.dx.C_x;
    if (rep.dx.B_x != "1" && rep.dx.C_x != "1") rep.discrepancies.push_back("B_x and C_x are both nontrivial");
    rep.decomposition = rep.aut0.shape;
    if (rep.stab_order > 1) rep.decomposition += " x| Z" + std::to_string(rep.stab_order);
    if (rep.D_x != "1") rep.decomposition += " x| " + rep.D_x;
    if (const auto* r = table_row(e.type, rep.info.label)) {
        rep.table_row = curated::get(*r, "cite");
        std::string filter = curated::has(*r, "filter") ? curated::get(*r, "filter") : "";
        rep.table_orders = curated::eval_rule(curated::get(*r, "orders"), filter, {{'n', e.type.rank}});
        rep.table_dx = split_bar(curated::get(*r, "dx"));
        if (curated::has(*r, "caveat")) rep.caveat = curated::get(*r, "caveat");
        if (curated::get(*r, "aut0") != rep.aut0.shape)
            rep.discrepancies.push_back("table shape " + curated::get(*r, "aut0") + " differs from " + rep.aut0.shape);
        if (rep.stab_order != 1 && !rep.table_orders.count(rep.stab_order))
            rep.discrepancies.push_back("stabilizer order " + std::to_string(rep.stab_order) +
                                        " is not among the table values");
        if (std::find(rep.table_dx.begin(), rep.table_dx.end(), rep.D_x) == rep.table_dx.end())
            rep.discrepancies.push_back("D_x = " + rep.D_x + " is not among the table options");
    } else {
        rep.discrepancies.push_back("no table row for " + e.type.str() + " case " + std::to_string(rep.info.label));
    }
    return rep;
}

namespace {

std::set<int> kernel_nodes(const LieType& t, int label) {
    if (label == 1) return {};
    if (label <= 3) {
        if (t.family == 'B') return {t.rank - 1};
        if (t.family == 'G') return {1};
        if (t.family == 'F') return {3};
    } else if (t.family == 'F') {
        return {2, 3};
    }
    throw DomainRejection("case " + std::to_string(label) + " does not occur in type " + t.str());
}

NilpotentTag tag_of(int label) {
    switch (label) {
    case 3: return NilpotentTag::SingleRoot;
    case 5: return NilpotentTag::A2Single;
    case 6: return NilpotentTag::A2Sum;
    default: return NilpotentTag::None;
    }
}

} // namespace

AdjointElement normal_form(const LieType& t, int label, std::uint64_t seed) {
    if (t.family == 'C') throw DomainRejection("type C excluded: the hyperplane section is a quadric");
    if (label < 1 || label > 6) throw std::invalid_argument("case label must be 1..6");
    std::set<int> zero = kernel_nodes(t, label);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> val(1, 50);
    AdjointElement e;
    e.type = t;
    e.nilpotent = tag_of(label);
    e.x_s.basis = Basis::Weights;
    for (int i = 0; i < t.rank; ++i) e.x_s.coords.push_back(Cyc(zero.count(i) ? 0 : val(rng)));
    return e;
}

AdjointElement normal_form_with_order(const LieType& t, int label, int d, std::uint64_t seed) {
    AdjointElement base = normal_form(t, label, seed);
    const RootSystem& rs = RootSystem::cached(t);
    CaseInfo c = classify_case(base);
    PerpSystem p = perp_root_system(base, c);
    for (std::uint64_t s = seed; s < seed + 64; ++s) {
        Witness w = regular_witness(p.rs, d, s);
        CartanVector xr = p.rs.to_roots(w.x);
        AdjointElement e = base;
        e.x_s.basis = Basis::Roots;
        e.x_s.coords.assign(rs.rank(), Cyc());
        for (int i = 0; i < p.rs.rank(); ++i)
            for (int k = 0; k < rs.rank(); ++k)
                if (p.simple[i][k]) e.x_s.coords[k] += xr.coords[i] * Rational(p.simple[i][k]);
        try {
            if (classify_case(e).label == label) return e;
        } catch (const DomainRejection&) {
        }
    }
    throw BudgetExhausted("no x_s of case " + std::to_string(label) + " with a regular element of order " +
                          std::to_string(d) + " in R-perp");
}

} // namespace lieaut
