#include "lieaut/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lieaut {

OrthAut identity_aut(const RootSystem& rs) {
    OrthAut g;
    for (int i = 0; i < rs.rank(); ++i) g.images.push_back(rs.simple_index(i));
    return g;
}

OrthAut simple_reflection(const RootSystem& rs, int i) {
    RootPerm p = rs.reflection_perm(i);
    return from_permutation(rs, p);
}

IMat aut_matrix(const RootSystem& rs, const OrthAut& g) {
    int r = rs.rank();
    IMat m(r, IVec(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) m[i][j] = rs.root(g.images[j])[i];
    return m;
}

RootPerm root_permutation(const RootSystem& rs, const OrthAut& g) {
    IMat m = aut_matrix(rs, g);
    int r = rs.rank();
    RootPerm p(rs.num_roots());
    IVec v(r);
    for (int k = 0; k < rs.num_roots(); ++k) {
        const IVec& b = rs.root(k);
        for (int i = 0; i < r; ++i) {
            int s = 0;
            for (int j = 0; j < r; ++j) s += m[i][j] * b[j];
            v[i] = s;
        }
        int idx = rs.find_root(v);
        if (idx < 0) throw std::invalid_argument("OrthAut does not preserve the root system");
        p[k] = (std::uint8_t)idx;
    }
    return p;
}

bool is_inner(const RootSystem& rs, const RootPerm& p0) {
    RootPerm p = p0;
    int r = rs.rank();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < r; ++i) {
            if (!rs.is_positive(p[rs.simple_index(i)])) {
                const RootPerm& s = rs.reflection_perm(i);
                RootPerm q(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[s[k]];
                p.swap(q);
                changed = true;
            }
        }
    }
    for (int i = 0; i < r; ++i)
        if (p[rs.simple_index(i)] != rs.simple_index(i)) return false;
    return true;
}

OrthAut from_permutation(const RootSystem& rs, const RootPerm& p) {
    OrthAut g;
    for (int i = 0; i < rs.rank(); ++i) g.images.push_back(p[rs.simple_index(i)]);
    g.is_outer = !is_inner(rs, p);
    return g;
}

OrthAut compose(const RootSystem& rs, const OrthAut& g, const OrthAut& h) {
    RootPerm pg = root_permutation(rs, g);
    OrthAut r;
    for (int i = 0; i < rs.rank(); ++i) r.images.push_back(pg[h.images[i]]);
    r.is_outer = g.is_outer != h.is_outer;
    return r;
}

OrthAut inverse(const RootSystem& rs, const OrthAut& g) {
    RootPerm p = root_permutation(rs, g);
    RootPerm q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) q[p[k]] = (std::uint8_t)k;
    OrthAut r = from_permutation(rs, q);
    return r;
}

int perm_order(const RootPerm& p) {
    std::vector<char> seen(p.size(), 0);
    long o = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (seen[k]) continue;
        int len = 0;
        for (std::size_t j = k; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        o = std::lcm(o, (long)len);
    }
    return (int)o;
}

int aut_order(const RootSystem& rs, const OrthAut& g) {
    return perm_order(root_permutation(rs, g));
}

CartanVector apply(const RootSystem& rs, const OrthAut& g, const CartanVector& v) {
    if ((int)g.images.size() != rs.rank() || (int)v.coords.size() != rs.rank())
        throw std::invalid_argument("apply: mismatched root systems");
    CartanVector c = rs.to_roots(v);
    IMat m = aut_matrix(rs, g);
    CartanVector out;
    out.basis = Basis::Roots;
    out.coords.assign(rs.rank(), Cyc());
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
            if (m[i][j]) out.coords[i] += c.coords[j] * Rational(m[i][j]);
    return v.basis == Basis::Roots ? out : rs.to_weights(out);
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
    int r = rs.rank();
    const IMat& a = rs.cartan();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(r, -1);
    std::vector<char> used(r, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            out.push_back(perm);
            return;
        }
        for (int c = 0; c < r; ++c) {
            if (used[c]) continue;
            bool ok = a[c][c] == a[i][i];
            for (int j = 0; j < i && ok; ++j) ok = a[c][perm[j]] == a[i][j] && a[perm[j]][c] == a[j][i];
            if (!ok) continue;
            used[c] = 1;
            perm[i] = c;
            rec(i + 1);
            used[c] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> reduced_word(const RootSystem& rs, const OrthAut& g) {
    RootPerm p = root_permutation(rs, g);
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rs.rank(); ++i) {
            if (!rs.is_positive(p[rs.simple_index(i)])) {
                const RootPerm& s = rs.reflection_perm(i);
                RootPerm q(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[s[k]];
                p.swap(q);
                word.push_back(i);
                changed = true;
            }
        }
    }
    for (int i = 0; i < rs.rank(); ++i)
        if (p[rs.simple_index(i)] != rs.simple_index(i)) throw std::invalid_argument("reduced_word: element is outer");
    // g s_{w1} ... s_{wk} = 1, so g = s_{wk} ... s_{w1}
    std::reverse(word.begin(), word.end());
    return word;
}

OrthAut from_word(const RootSystem& rs, const std::vector<int>& word) {
    RootPerm p(rs.num_roots());
    std::iota(p.begin(), p.end(), 0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const RootPerm& s = rs.reflection_perm(*it);
        RootPerm q(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) q[k] = s[p[k]];
        p.swap(q);
    }
    return from_permutation(rs, p);
}

std::vector<int> exponents(const RootSystem& rs) {
    int maxh = 0;
    for (int i = 0; i < rs.num_positive(); ++i) maxh = std::max(maxh, rs.height(i));
    std::vector<int> n(maxh + 2, 0);
    for (int i = 0; i < rs.num_positive(); ++i) n[rs.height(i)]++;
    std::vector<int> e;
    for (int m = 1; m <= maxh; ++m)
        for (int k = 0; k < n[m] - n[m + 1]; ++k) e.push_back(m);
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<int> degrees(const RootSystem& rs) {
    std::vector<int> d = exponents(rs);
    for (auto& x : d) x += 1;
    return d;
}

std::uint64_t weyl_order(const RootSystem& rs) {
    std::uint64_t o = 1;
    for (int d : degrees(rs)) o *= (std::uint64_t)d;
    return o;
}

void for_each_weyl(const RootSystem& rs, bool include_outer, std::uint64_t bound,
                   const std::function<void(const RootPerm&)>& visit) {
    std::vector<std::vector<int>> gamma;
    if (include_outer) gamma = diagram_automorphisms(rs);
    std::uint64_t total = weyl_order(rs) * (include_outer ? gamma.size() : 1);
    if (total > bound)
        throw WeylBoundExceeded("Weyl group order " + std::to_string(total) + " exceeds bound " +
                                std::to_string(bound));
    int nr = rs.num_roots();
    int r = rs.rank();
    std::vector<RootPerm> gperms;
    for (const auto& pi : gamma) {
        OrthAut g;
        for (int i = 0; i < r; ++i) g.images.push_back(rs.simple_index(pi[i]));
        gperms.push_back(root_permutation(rs, g));
    }
    RootPerm id(nr);
    std::iota(id.begin(), id.end(), 0);
    RootPerm tmp(nr);
    // depth-first over reduced words; u = s_i w is kept only if i is the least left descent of u
    std::function<void(const RootPerm&, const RootPerm&)> rec = [&](const RootPerm& p, const RootPerm& pinv) {
        if (include_outer) {
            for (const auto& gp : gperms) {
                for (int k = 0; k < nr; ++k) tmp[k] = p[gp[k]];
                visit(tmp);
            }
        } else {
            visit(p);
        }
        for (int i = 0; i < r; ++i) {
            int ai = rs.simple_index(i);
            if (!rs.is_positive(pinv[ai])) continue;
            const RootPerm& s = rs.reflection_perm(i);
            bool minimal = true;
            for (int j = 0; j < i && minimal; ++j) {
                int aj = rs.simple_index(j);
                if (!rs.is_positive(pinv[s[aj]])) minimal = false;
            }
            if (!minimal) continue;
            RootPerm q(nr), qinv(nr);
            for (int k = 0; k < nr; ++k) q[k] = s[p[k]];
            for (int k = 0; k < nr; ++k) qinv[k] = pinv[s[k]];
            rec(q, qinv);
        }
    };
    rec(id, id);
}

std::vector<OrthAut> enumerate_weyl(const RootSystem& rs, bool include_outer, std::uint64_t bound) {
    std::vector<OrthAut> out;
    for_each_weyl(rs, include_outer, bound, [&](const RootPerm& p) { out.push_back(from_permutation(rs, p)); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct SearchContext {
    const RootSystem& rs;
    std::vector<int> order;
    std::vector<std::vector<int>> cand;
    std::vector<int> chosen;
    std::vector<OrthAut> found;
    bool include_outer;

    void run(std::size_t pos) {
        if (pos == order.size()) {
            OrthAut g;
            g.images = chosen;
            RootPerm p;
            try {
                p = root_permutation(rs, g);
            } catch (const std::invalid_argument&) {
                return;
            }
            g.is_outer = !is_inner(rs, p);
            if (g.is_outer && !include_outer) return;
            found.push_back(g);
            return;
        }
        int i = order[pos];
        for (int b : cand[i]) {
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int j = order[q];
                ok = rs.pair2(b, chosen[j]) == rs.gram2()[i][j];
            }
            if (!ok) continue;
            chosen[i] = b;
            run(pos + 1);
        }
        chosen[i] = -1;
    }
};

std::vector<int> node_order(const RootSystem& rs) {
    std::vector<int> order(rs.rank());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return rs.neighbours(a).size() > rs.neighbours(b).size();
    });
    return order;
}

std::vector<Cyc> root_values(const RootSystem& rs, const CartanVector& x) {
    std::vector<Cyc> bx = rs.gram_times(x);
    std::vector<Cyc> val(rs.num_roots());
    for (int k = 0; k < rs.num_positive(); ++k) {
        Cyc v;
        for (int i = 0; i < rs.rank(); ++i)
            if (rs.root(k)[i]) v += bx[i] * Rational(rs.root(k)[i]);
        val[k] = v;
        val[rs.negative(k)] = -v;
    }
    return val;
}

bool all_zero(const std::vector<Cyc>& v) {
    return std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); });
}

} // namespace

std::vector<OrthAut> search_line_isometries(const RootSystem& rs, const CartanVector& x, const Cyc& xi,
                                            bool include_outer) {
    std::vector<Cyc> val = root_values(rs, x);
    if (all_zero(val)) throw std::invalid_argument("search_line_isometries: x = 0");
    Cyc xinv = xi.inverse();
    SearchContext ctx{rs, node_order(rs), {}, std::vector<int>(rs.rank(), -1), {}, include_outer};
    ctx.cand.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        int ai = rs.simple_index(i);
        Cyc t = val[ai] * xinv;
        for (int b = 0; b < rs.num_roots(); ++b)
            if (rs.pair2(b, b) == rs.pair2(ai, ai) && val[b] == t) ctx.cand[i].push_back(b);
    }
    ctx.run(0);
    std::sort(ctx.found.begin(), ctx.found.end());
    return ctx.found;
}

std::vector<LineIsometry> line_isometries(const RootSystem& rs, const CartanVector& x, bool include_outer) {
    std::vector<Cyc> val = root_values(rs, x);
    if (all_zero(val)) throw std::invalid_argument("line_isometries: x = 0");
    std::vector<int> order = node_order(rs);
    int i0 = -1;
    for (int i : order)
        if (!val[rs.simple_index(i)].is_zero()) {
            i0 = i;
            break;
        }
    order.erase(std::find(order.begin(), order.end(), i0));
    order.insert(order.begin(), i0);
    // roots grouped by (length, value)
    std::map<std::pair<int, Cyc>, std::vector<int>> byval;
    for (int b = 0; b < rs.num_roots(); ++b) byval[{rs.pair2(b, b), val[b]}].push_back(b);
    int a0 = rs.simple_index(i0);
    Cyc inv0 = val[a0].inverse();
    std::vector<LineIsometry> out;
    for (int b0 = 0; b0 < rs.num_roots(); ++b0) {
        if (rs.pair2(b0, b0) != rs.pair2(a0, a0) || val[b0].is_zero()) continue;
        Cyc ratio = val[b0] * inv0;  // xi^{-1}
        SearchContext ctx{rs, order, {}, std::vector<int>(rs.rank(), -1), {}, include_outer};
        ctx.cand.resize(rs.rank());
        bool dead = false;
        for (int i = 0; i < rs.rank() && !dead; ++i) {
            if (i == i0) {
                ctx.cand[i] = {b0};
                continue;
            }
            int ai = rs.simple_index(i);
            auto it = byval.find({rs.pair2(ai, ai), val[ai] * ratio});
            if (it == byval.end()) dead = true;
            else ctx.cand[i] = it->second;
        }
        if (dead) continue;
        ctx.run(0);
        if (ctx.found.empty()) continue;
        Cyc xi = ratio.inverse();
        for (auto& g : ctx.found) out.push_back({g, xi});
    }
    std::sort(out.begin(), out.end(), [](const LineIsometry& a, const LineIsometry& b) { return a.g < b.g; });
    return out;
}

} // namespace lieaut
