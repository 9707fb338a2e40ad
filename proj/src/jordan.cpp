#include "lieaut/jordan.hpp"

#include "lieaut/curated.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace lieaut {

void JordanFamily::validate() const {
    if (std::string("RCHO").find(base) == std::string::npos) throw std::invalid_argument("Jordan base must be R, C, H or O");
    if (n < 3) throw std::invalid_argument("Jordan algebras need n >= 3");
    if (base == 'O' && n != 3) throw std::invalid_argument("the octonionic algebra needs n = 3");
}

std::string JordanFamily::str() const { return std::string("J_") + std::to_string(n) + "(" + base + ")"; }

namespace {

const curated::Record& jordan_row(char base) {
    for (const auto* r : curated::table("jordan"))
        if (curated::get(*r, "base")[0] == base) return *r;
    throw std::logic_error("no Jordan table row for base " + std::string(1, base));
}

std::string with_n(std::string s, int n) {
    // substitute the matrix size into the row's expressions
    const std::pair<std::string, int> subs[] = {{"2n", 2 * n}, {"n-1", n - 1}, {"n-2", n - 2}, {"n", n}};
    for (const auto& [pat, v] : subs) {
        std::size_t pos = 0;
        while ((pos = s.find(pat, pos)) != std::string::npos) {
            bool word = (pos == 0 || !std::isalpha((unsigned char)s[pos - 1])) &&
                        (pos + pat.size() == s.size() || !std::isalpha((unsigned char)s[pos + pat.size()]));
            if (!word) {
                pos += pat.size();
                continue;
            }
            s.replace(pos, pat.size(), std::to_string(v));
        }
    }
    return s;
}

} // namespace

std::string JordanFamily::algebra() const { return with_n(curated::get(jordan_row(base), "algebra"), n); }
std::string JordanFamily::ambient() const { return with_n(curated::get(jordan_row(base), "ambient"), n); }
std::string JordanFamily::group() const { return with_n(curated::get(jordan_row(base), "group"), n); }
std::string JordanFamily::variety() const { return with_n(curated::get(jordan_row(base), "x"), n); }
std::string JordanFamily::citation() const { return curated::get(jordan_row(base), "cite"); }

bool smooth_pencil(const PencilConfig& p) {
    for (std::size_t i = 0; i < p.spectrum.size(); ++i)
        for (std::size_t j = i + 1; j < p.spectrum.size(); ++j)
            if (p.spectrum[i] == p.spectrum[j]) return false;
    return true;
}

std::vector<ProjPoint> branch_points(const PencilConfig& p) {
    if (!smooth_pencil(p)) throw std::domain_error("pencil is not smooth: repeated spectrum values");
    std::vector<ProjPoint> out;
    for (const auto& x : p.spectrum) out.push_back(ProjPoint::affine(-x));
    return out;
}

// ---- group classes ----

GroupClass GroupClass::parse(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '_' && c != ' ') s += c;
    if (s == "A5" || s == "I") return {'I', 60};
    if (s == "S4" || s == "O") return {'O', 24};
    if (s == "A4" || s == "T") return {'T', 12};
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'D' || s[0] == 'C')) {
        int k = 0;
        try {
            k = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown group class '" + raw + "'");
        }
        if (s[0] == 'D') {
            if (k < 4 || k % 2) throw std::invalid_argument("dihedral class D_2m needs an even order >= 4");
            return {'D', k};
        }
        if (k < 1) throw std::invalid_argument("cyclic class needs order >= 1");
        return {'Z', k};
    }
    throw std::invalid_argument("unknown group class '" + raw + "' (Z_d, D_2m, A4, S4, A5)");
}

std::string GroupClass::str() const {
    switch (kind) {
    case 'Z': return "Z_" + std::to_string(order);
    case 'D': return "D_" + std::to_string(order);
    case 'T': return "A4";
    case 'O': return "S4";
    case 'I': return "A5";
    }
    return "?";
}

std::vector<int> GroupClass::special_orbits() const {
    switch (kind) {
    case 'Z': return order >= 2 ? std::vector<int>{1, 1} : std::vector<int>{};
    case 'D': return {order / 2, order / 2, 2};
    case 'T': return {4, 4, 6};
    case 'O': return {6, 8, 12};
    case 'I': return {12, 20, 30};
    }
    return {};
}

// ---- symmetry of a finite point set ----

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) {
    Perm h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

int perm_order(const Perm& p) {
    Perm q = p;
    for (int k = 1;; ++k) {
        bool id = true;
        for (std::size_t i = 0; i < q.size() && id; ++i) id = q[i] == (int)i;
        if (id) return k;
        q = compose(p, q);
    }
}

std::set<Perm> generated(const std::vector<Perm>& gens, std::size_t n) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> g{id};
    std::vector<Perm> todo{id};
    while (!todo.empty()) {
        Perm p = todo.back();
        todo.pop_back();
        for (const auto& s : gens) {
            Perm q = compose(s, p);
            if (g.insert(q).second) todo.push_back(q);
        }
    }
    return g;
}

struct CP {
    std::complex<double> x, y;
};

CP cp(const ProjPoint& p) { return {numeric(p.x), numeric(p.y)}; }

std::array<double, 3> sphere(const CP& p) {
    double n = std::sqrt(std::norm(p.x) + std::norm(p.y));
    std::complex<double> x = p.x / n, y = p.y / n;
    std::complex<double> w = x * std::conj(y);
    return {2 * w.real(), 2 * w.imag(), std::norm(x) - std::norm(y)};
}

/* Grid index of points on the Riemann sphere. */
class SphereIndex {
public:
    SphereIndex(const std::vector<CP>& pts, double tol) : tol_(tol), h_(tol * 4) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            s_.push_back(sphere(pts[i]));
            cells_[key(s_.back(), 0, 0, 0)].push_back((int)i);
        }
    }
    std::vector<int> near(const CP& p) const {
        auto s = sphere(p);
        std::vector<int> out;
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b)
                for (int c = -1; c <= 1; ++c) {
                    auto it = cells_.find(key(s, a, b, c));
                    if (it == cells_.end()) continue;
                    for (int i : it->second) {
                        double d = 0;
                        for (int k = 0; k < 3; ++k) d += (s[k] - s_[i][k]) * (s[k] - s_[i][k]);
                        if (std::sqrt(d) <= tol_) out.push_back(i);
                    }
                }
        return out;
    }

private:
    double tol_, h_;
    std::vector<std::array<double, 3>> s_;
    std::unordered_map<long long, std::vector<int>> cells_;
    long long key(const std::array<double, 3>& s, int a, int b, int c) const {
        long long i = (long long)std::floor(s[0] / h_) + a, j = (long long)std::floor(s[1] / h_) + b,
                  k = (long long)std::floor(s[2] / h_) + c;
        return (i * 1000003LL + j) * 1000003LL + k;
    }
};

using CMat = std::array<std::complex<double>, 4>;

CMat cframe(const CP& p1, const CP& p2, const CP& p3) {
    auto det = [](const CP& p, const CP& q) { return p.x * q.y - p.y * q.x; };
    auto mu = det(p3, p1), nu = det(p2, p3);
    return {mu * p2.x, nu * p1.x, mu * p2.y, nu * p1.y};
}

CMat cinv(const CMat& m) { return {m[3], -m[1], -m[2], m[0]}; }

CMat cmul(const CMat& f, const CMat& g) {
    return {f[0] * g[0] + f[1] * g[2], f[0] * g[1] + f[1] * g[3], f[2] * g[0] + f[3] * g[2],
            f[2] * g[1] + f[3] * g[3]};
}

CP capply(const CMat& m, const CP& p) { return {m[0] * p.x + m[1] * p.y, m[2] * p.x + m[3] * p.y}; }

} // namespace

GroupClass classify_group(const std::vector<MobiusMap>& elements, std::map<int, int>& element_orders) {
    int n = (int)elements.size();
    if (element_orders.empty())
        for (const auto& g : elements) ++element_orders[g.order()];
    int maxo = element_orders.rbegin()->first;
    if (maxo == n) return {'Z', n};
    if (n == 4 || (n % 2 == 0 && element_orders.count(n / 2))) return {'D', n};
    if (n == 12) return {'T', 12};
    if (n == 24) return {'O', 24};
    if (n == 60) return {'I', 60};
    throw std::logic_error("finite Mobius group of order " + std::to_string(n) + " is not in the list");
}

SymmetryReport classify_symmetry(const std::vector<ProjPoint>& input, bool prefilter) {
    const std::size_t n = input.size();
    if (n < 3) throw std::invalid_argument("classify_symmetry needs at least 3 points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (same_point(input[i], input[j])) throw std::invalid_argument("classify_symmetry: points not distinct");
    std::vector<ProjPoint> pts = common_field(input);
    std::vector<CP> num;
    for (const auto& p : pts) num.push_back(cp(p));
    SphereIndex index(num, 1e-7);
    CMat base_inv = cinv(cframe(num[0], num[1], num[2]));

    std::vector<Perm> perms;
    std::vector<MobiusMap> maps;
    Perm perm(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                std::vector<std::vector<int>> cand(n);
                if (prefilter) {
                    CMat m = cmul(cframe(num[i], num[j], num[k]), base_inv);
                    bool ok = true;
                    for (std::size_t t = 3; t < n && ok; ++t) {
                        cand[t] = index.near(capply(m, num[t]));
                        ok = !cand[t].empty();
                    }
                    if (!ok) continue;
                }
                MobiusMap m = mobius_from_triples(pts[0], pts[1], pts[2], pts[i], pts[j], pts[k]);
                perm[0] = (int)i;
                perm[1] = (int)j;
                perm[2] = (int)k;
                bool ok = true;
                for (std::size_t t = 3; t < n && ok; ++t) {
                    ProjPoint q = m(pts[t]);
                    ok = false;
                    auto test = [&](int s) {
                        if (!ok && same_point(q, pts[s])) {
                            perm[t] = s;
                            ok = true;
                        }
                    };
                    if (prefilter)
                        for (int s : cand[t]) test(s);
                    else
                        for (std::size_t s = 0; s < n; ++s) test((int)s);
                }
                if (!ok) continue;
                perms.push_back(perm);
                maps.push_back(m);
            }
        }

    SymmetryReport rep;
    std::set<Perm> group(perms.begin(), perms.end());
    rep.closed = group.size() == perms.size();
    for (const auto& f : perms) {
        Perm inv(n);
        for (std::size_t t = 0; t < n; ++t) inv[f[t]] = (int)t;
        rep.closed = rep.closed && group.count(inv);
        for (const auto& g : perms) rep.closed = rep.closed && group.count(compose(f, g));
    }
    if (!rep.closed) throw std::logic_error("classify_symmetry: the stabilizer is not closed under composition");
    std::vector<int> orders;
    for (const auto& f : perms) {
        orders.push_back(perm_order(f));
        ++rep.element_orders[orders.back()];
    }
    for (const auto& m : maps) rep.elements.push_back(m.normalized());
    rep.group = classify_group(rep.elements, rep.element_orders);
    rep.has_fixed_point = rep.group.kind == 'Z';
    // generators: an element of maximal order, then whatever completes the group
    std::size_t top = std::max_element(orders.begin(), orders.end()) - orders.begin();
    std::vector<Perm> gens{perms[top]};
    rep.generators.push_back(rep.elements[top]);
    for (std::size_t i = 0; i < perms.size() && generated(gens, n).size() < perms.size(); ++i) {
        auto with = gens;
        with.push_back(perms[i]);
        if (generated(with, n).size() > generated(gens, n).size()) {
            gens = with;
            rep.generators.push_back(rep.elements[i]);
        }
    }
    return rep;
}

NumericSymmetry classify_symmetry_numeric(const std::vector<std::complex<double>>& input, double tol) {
    const std::size_t n = input.size();
    if (n < 3) throw std::invalid_argument("classify_symmetry needs at least 3 points");
    std::vector<CP> pts;
    for (const auto& z : input) pts.push_back(std::isinf(z.real()) ? CP{1, 0} : CP{z, 1});
    // cross-ratio coordinate of every point in the frame of a triple
    auto coords = [&](const CMat& frame_inv) {
        std::vector<CP> c;
        for (const auto& p : pts) c.push_back(capply(frame_inv, p));
        return c;
    };
    auto close = [&](const CP& a, const CP& b) {
        // compare a.x/a.y with b.x/b.y, or their inverses near infinity
        if (std::abs(a.y) >= std::abs(a.x)) {
            if (std::abs(b.y) < 1e-300) return false;
            auto u = a.x / a.y, v = b.x / b.y;
            return std::abs(u - v) <= tol * std::max(1.0, std::abs(u));
        }
        if (std::abs(b.x) < 1e-300) return false;
        auto u = a.y / a.x, v = b.y / b.x;
        return std::abs(u - v) <= tol * std::max(1.0, std::abs(u));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (close(pts[i], pts[j])) throw std::invalid_argument("classify_symmetry: points not distinct");
    std::vector<CP> w = coords(cinv(cframe(pts[0], pts[1], pts[2])));
    NumericSymmetry out;
    std::vector<Perm> perms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                CMat f = cframe(pts[i], pts[j], pts[k]);
                std::vector<CP> u = coords(cinv(f));
                Perm perm(n, -1);
                bool ok = true;
                for (std::size_t t = 0; t < n && ok; ++t) {
                    ok = false;
                    for (std::size_t s = 0; s < n && !ok; ++s)
                        if (close(w[t], u[s])) {
                            perm[t] = (int)s;
                            ok = true;
                        }
                }
                if (!ok) continue;
                perms.push_back(perm);
                out.elements.push_back(cmul(f, cinv(cframe(pts[0], pts[1], pts[2]))));
            }
    std::map<int, int> orders;
    for (const auto& p : perms) ++orders[perm_order(p)];
    std::vector<MobiusMap> dummy(perms.size());
    out.group = classify_group(dummy, orders);
    return out;
}

// ---- feasibility ----

std::string Feasibility::str() const {
    if (!feasible) return "infeasible";
    std::string s;
    for (int k : special) s += (s.empty() ? "" : "+") + std::to_string(k);
    if (generic) s += (s.empty() ? "" : "+") + std::to_string(generic) + "x" + std::to_string(group_order);
    return s.empty() ? "0" : s;
}

std::vector<Feasibility> decompositions(const GroupClass& g, int n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    std::vector<int> sp = g.special_orbits();
    std::vector<std::pair<std::pair<int, int>, Feasibility>> all;
    for (int mask = 0; mask < (1 << sp.size()); ++mask) {
        Feasibility f;
        f.group_order = g.order;
        int sum = 0;
        for (std::size_t i = 0; i < sp.size(); ++i)
            if (mask >> i & 1) {
                f.special.push_back(sp[i]);
                sum += sp[i];
            }
        if (sum > n || (n - sum) % g.order) continue;
        f.generic = (n - sum) / g.order;
        f.feasible = true;
        all.push_back({{f.generic, mask}, f});
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Feasibility> out;
    for (auto& [k, f] : all) out.push_back(f);
    return out;
}

Feasibility feasible_orders(const GroupClass& g, int n) {
    auto all = decompositions(g, n);
    if (all.empty()) {
        Feasibility f;
        f.group_order = g.order;
        return f;
    }
    return all.front();
}

// ---- standard models ----

namespace {

MobiusMap diag(const Cyc& a, const Cyc& d) { return {a, Cyc(0), Cyc(0), d}; }

std::vector<ProjPoint> orbit_of_fixed_point(const std::vector<MobiusMap>& group, int order, std::size_t size,
                                            const std::vector<std::vector<ProjPoint>>& avoid) {
    for (const auto& g : group) {
        if (g.order() != order) continue;
        for (const auto& f : fixed_points(g)) {
            auto o = orbit(group, f);
            if (o.size() != size) continue;
            bool fresh = true;
            for (const auto& a : avoid)
                for (const auto& p : a)
                    if (same_point(p, f)) fresh = false;
            if (fresh) return o;
        }
    }
    throw std::logic_error("no special orbit of size " + std::to_string(size));
}

PlatonicModel build_model(const GroupClass& g) {
    PlatonicModel m;
    m.group = g;
    ProjPoint inf = ProjPoint::infinity(), zero = ProjPoint::affine(Cyc(0));
    switch (g.kind) {
    case 'Z': {
        m.elements = group_closure({diag(Cyc::zeta(g.order), Cyc(1))});
        if (g.order >= 2) m.special = {{zero}, {inf}};
        break;
    }
    case 'D': {
        int k = g.order / 2;
        m.elements = group_closure({diag(Cyc::zeta(k), Cyc(1)), MobiusMap{Cyc(0), Cyc(1), Cyc(1), Cyc(0)}});
        m.special = {orbit(m.elements, ProjPoint::affine(Cyc(1))), orbit(m.elements, ProjPoint::affine(Cyc::zeta(2 * k))),
                     {zero, inf}};
        break;
    }
    case 'O':
    case 'T': {
        Cyc i = Cyc::zeta(4);
        // rotations z -> i z and z -> (1+z)/(1-z), scaled to rational determinant
        std::vector<MobiusMap> s4 =
            group_closure({diag(Cyc(1) + i, Cyc(1) - i), MobiusMap{Cyc(1), Cyc(1), Cyc(-1), Cyc(1)}});
        if (g.kind == 'O') {
            m.elements = s4;
            m.special.push_back(orbit(s4, inf));
            m.special.push_back(orbit_of_fixed_point(s4, 3, 8, m.special));
            m.special.push_back(orbit_of_fixed_point(s4, 2, 12, m.special));
        } else {
            std::vector<MobiusMap> squares;
            for (const auto& h : s4) squares.push_back(h.compose(h));
            m.elements = group_closure(squares);
            auto a = orbit_of_fixed_point(m.elements, 3, 4, {});
            m.special.push_back(a);
            m.special.push_back(orbit_of_fixed_point(m.elements, 3, 4, m.special));
            m.special.push_back(orbit(m.elements, inf));
        }
        break;
    }
    case 'I': {
        Cyc e = Cyc::zeta(5);
        Cyc e2 = e * e, e3 = e2 * e, e4 = e3 * e;
        MobiusMap s = diag(e3, e2);
        MobiusMap t{-(e - e4), e2 - e3, e2 - e3, e - e4};
        m.elements = group_closure({s, t});
        m.special.push_back(orbit(m.elements, inf));
        m.special.push_back(orbit_of_fixed_point(m.elements, 3, 20, m.special));
        m.special.push_back(orbit_of_fixed_point(m.elements, 2, 30, m.special));
        break;
    }
    }
    if ((int)m.elements.size() != g.order)
        throw std::logic_error("model of " + g.str() + " has " + std::to_string(m.elements.size()) + " elements");
    std::vector<int> sizes;
    for (const auto& o : m.special) sizes.push_back((int)o.size());
    if (sizes != g.special_orbits()) throw std::logic_error("model of " + g.str() + " has the wrong special orbits");
    return m;
}

} // namespace

const PlatonicModel& platonic_model(const GroupClass& g) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, PlatonicModel> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(g.kind, g.order);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_model(g)).first;
    return it->second;
}

namespace {

/* Base points for free orbits: 2, 3, 1/2, 5, 1/3, 7, ... shifted by the attempt number. */
ProjPoint free_point(int k) {
    static const int num[] = {2, 3, 1, 5, 1, 7, 2, 11, 3, 13, 4, 17, 5, 19};
    static const int den[] = {1, 1, 2, 1, 3, 1, 5, 1, 7, 1, 9, 1, 11, 1};
    int m = sizeof(num) / sizeof(num[0]);
    Rational q(num[k % m] + 3 * (k / m), den[k % m]);
    Cyc z(q);
    if (k % 3 == 2) z += Cyc::zeta(4) * Rational(1, 3);   // off the real line
    return ProjPoint::affine(z);
}

bool contains(const std::vector<ProjPoint>& set, const ProjPoint& p) {
    for (const auto& q : set)
        if (same_point(p, q)) return true;
    return false;
}

} // namespace

PencilConfig witness_config(const GroupClass& g, int n, char base) {
    JordanFamily fam{base, n};
    fam.validate();
    auto decs = decompositions(g, n);
    if (decs.empty()) throw std::domain_error(g.str() + " has no invariant configuration of " + std::to_string(n) + " points");
    const PlatonicModel& model = platonic_model(g);
    std::vector<int> sp = g.special_orbits();
    for (const auto& dec : decs) {
        for (int attempt = 0; attempt < 6; ++attempt) {
            std::vector<ProjPoint> pts;
            // special orbits of the requested sizes, each used once
            std::vector<bool> used(sp.size(), false);
            for (int size : dec.special)
                for (std::size_t i = 0; i < sp.size(); ++i)
                    if (!used[i] && sp[i] == size) {
                        used[i] = true;
                        pts.insert(pts.end(), model.special[i].begin(), model.special[i].end());
                        break;
                    }
            int k = attempt * 3;
            for (int f = 0; f < dec.generic; ++k) {
                ProjPoint p = free_point(k);
                if (contains(pts, p)) continue;
                auto o = orbit(model.elements, p);
                if ((int)o.size() != g.order) continue;
                pts.insert(pts.end(), o.begin(), o.end());
                ++f;
            }
            SymmetryReport rep = classify_symmetry(pts, true);
            if (!(rep.group == g)) continue;
            // move infinity to a finite point: z -> 1/(z - c)
            bool has_inf = std::any_of(pts.begin(), pts.end(), [](const ProjPoint& p) { return p.is_infinity(); });
            PencilConfig cfg;
            cfg.family = fam;
            Cyc c(0);
            if (has_inf) {
                for (long t = -1;; --t)
                    if (!contains(pts, ProjPoint::affine(Cyc(t)))) {
                        c = Cyc(t);
                        break;
                    }
            }
            for (const auto& p : pts) {
                ProjPoint q = has_inf ? MobiusMap{Cyc(0), Cyc(1), Cyc(1), -c}(p) : p;
                cfg.spectrum.push_back(-(q.x * q.y.inverse()));
            }
            return cfg;
        }
    }
    throw std::domain_error("no configuration of " + std::to_string(n) + " points has symmetry group exactly " +
                            g.str() + " (every invariant set has a larger group)");
}

PencilReport pencil_report(const PencilConfig& p) {
    p.family.validate();
    if ((int)p.spectrum.size() != p.family.n)
        throw std::invalid_argument("spectrum has " + std::to_string(p.spectrum.size()) + " values, " +
                                    p.family.str() + " needs " + std::to_string(p.family.n));
    PencilReport r;
    r.smooth = smooth_pencil(p);
    r.kernel = "Stab_Aut(X)(x) with X = " + p.family.variety() + ", homogeneous under " + p.family.group();
    if (!r.smooth) return r;
    r.points = branch_points(p);
    r.symmetry = classify_symmetry(r.points, true);
    r.unnatural = !r.symmetry.has_fixed_point;
    r.sequence = "1 -> Stab_Aut(X)(x) -> Aut(H_x) -> " + r.symmetry.group.str() + " -> 1";
    return r;
}

} // namespace lieaut
