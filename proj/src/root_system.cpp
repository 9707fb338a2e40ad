#include "lieaut/root_system.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lieaut {

std::string LieType::str() const {
    return std::string(1, family) + std::to_string(rank);
}

LieType LieType::parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Lie type '" + s + "'");
    LieType t;
    t.family = (char)std::toupper((unsigned char)s[0]);
    try {
        std::size_t used = 0;
        t.rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Lie type '" + s + "'");
    }
    validate(t);
    return t;
}

void validate(const LieType& t) {
    bool ok = false;
    switch (t.family) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 2; break;
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 3; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: ok = false;
    }
    if (!ok) throw std::invalid_argument("illegal Lie type " + t.str());
}

std::uint64_t pack_ivec(const IVec& v) {
    std::uint64_t k = 0;
    for (int c : v) k = (k << 8) | (std::uint64_t)(std::uint8_t)(c + 64);
    return k;
}

QMat invert(const QMat& m) {
    int n = (int)m.size();
    QMat a(n, QVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && !sgn(a[p][c])) ++p;
        if (p == n) throw std::domain_error("invert: singular matrix");
        std::swap(a[p], a[c]);
        Rational inv = Rational(1) / a[c][c];
        for (auto& e : a[c]) e *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || !sgn(a[i][c])) continue;
            Rational f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    QMat r(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = a[i][n + j];
    return r;
}

std::vector<Rational> solve(const QMat& a, const QVec& b) {
    // least-effort: full-column-rank systems, possibly overdetermined
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    QMat m(rows, QVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && !sgn(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& e : m[r]) e *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || !sgn(m[i][c])) continue;
            Rational f = m[i][c];
            for (int j = 0; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (sgn(m[i][cols])) throw std::domain_error("solve: inconsistent system");
    if ((int)pivcol.size() != cols) throw std::domain_error("solve: underdetermined system");
    QVec x(cols);
    for (int i = 0; i < r; ++i) x[pivcol[i]] = m[i][cols];
    return x;
}

namespace {

QVec unit(int n, int i, Rational c = 1) {
    QVec v(n, Rational(0));
    v[i] = c;
    return v;
}

QVec diff(int n, int i, int j) {
    QVec v(n, Rational(0));
    v[i] += 1;
    v[j] -= 1;
    return v;
}

std::vector<QVec> bourbaki_simple(const LieType& t) {
    int n = t.rank;
    std::vector<QVec> s;
    switch (t.family) {
    case 'A':
        for (int i = 0; i < n; ++i) s.push_back(diff(n + 1, i, i + 1));
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
        s.push_back(unit(n, n - 1));
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
        s.push_back(unit(n, n - 1, 2));
        break;
    case 'D': {
        for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
        QVec v(n, Rational(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        s.push_back(v);
        break;
    }
    case 'E': {
        QVec a1(8, Rational(-1, 2));
        a1[0] = Rational(1, 2);
        a1[7] = Rational(1, 2);
        s.push_back(a1);
        QVec a2(8, Rational(0));
        a2[0] = 1;
        a2[1] = 1;
        s.push_back(a2);
        s.push_back(diff(8, 1, 0));
        for (int i = 4; i <= n; ++i) s.push_back(diff(8, i - 2, i - 3));
        break;
    }
    case 'F': {
        s.push_back(diff(4, 1, 2));
        s.push_back(diff(4, 2, 3));
        s.push_back(unit(4, 3));
        QVec a4(4, Rational(-1, 2));
        a4[0] = Rational(1, 2);
        s.push_back(a4);
        break;
    }
    case 'G': {
        // node 1 long, node 2 short
        QVec a1(3, Rational(1));
        a1[0] = -2;
        s.push_back(a1);
        s.push_back(diff(3, 0, 1));
        break;
    }
    }
    return s;
}

Rational dot(const QVec& a, const QVec& b) {
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

} // namespace

std::vector<CartanComponent> identify_cartan(const IMat& cartan, const std::vector<Rational>& lengths) {
    int n = (int)cartan.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> g;
        std::deque<int> q{i};
        comp[i] = (int)groups.size();
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            g.push_back(u);
            for (int v = 0; v < n; ++v)
                if (v != u && cartan[u][v] != 0 && comp[v] < 0) {
                    comp[v] = comp[i];
                    q.push_back(v);
                }
        }
        std::sort(g.begin(), g.end());
        groups.push_back(g);
    }
    std::vector<CartanComponent> out;
    for (const auto& g : groups) {
        int m = (int)g.size();
        auto adj = [&](int u) {
            std::vector<int> r;
            for (int v : g)
                if (v != u && cartan[u][v] != 0) r.push_back(v);
            return r;
        };
        auto bond = [&](int u, int v) { return cartan[u][v] * cartan[v][u]; };
        // walk a path from an end node
        auto walk = [&](int start, int avoid) {
            std::vector<int> path{start};
            int prev = avoid, cur = start;
            while (true) {
                int nxt = -1;
                for (int v : adj(cur))
                    if (v != prev) nxt = v;
                if (nxt < 0) break;
                path.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            return path;
        };
        CartanComponent c;
        if (m == 1) {
            c.type = {'A', 1};
            c.nodes = g;
            out.push_back(c);
            continue;
        }
        int maxbond = 1, branch = -1;
        for (int u : g) {
            if ((int)adj(u).size() >= 3) branch = u;
            for (int v : adj(u)) maxbond = std::max(maxbond, bond(u, v));
        }
        std::vector<int> ends;
        for (int u : g)
            if (adj(u).size() == 1) ends.push_back(u);
        if (maxbond == 3) {
            int lg = lengths[g[0]] > lengths[g[1]] ? g[0] : g[1];
            c.type = {'G', 2};
            c.nodes = {lg, lg == g[0] ? g[1] : g[0]};
        } else if (maxbond == 2) {
            if (m == 2) {
                int lg = lengths[g[0]] > lengths[g[1]] ? g[0] : g[1];
                c.type = {'B', 2};
                c.nodes = {lg, lg == g[0] ? g[1] : g[0]};
            } else {
                std::vector<int> path = walk(ends[0], -1);
                int k = -1;
                for (int i = 0; i + 1 < m; ++i)
                    if (bond(path[i], path[i + 1]) == 2) k = i;
                if (k == 0) {
                    std::reverse(path.begin(), path.end());
                    k = m - 2;
                }
                if (k == m - 2) {
                    bool short_end = lengths[path[m - 1]] < lengths[path[m - 2]];
                    c.type = {short_end ? 'B' : 'C', m};
                    c.nodes = path;
                } else {
                    // F4: long nodes first
                    if (lengths[path[0]] < lengths[path[m - 1]]) std::reverse(path.begin(), path.end());
                    c.type = {'F', 4};
                    c.nodes = path;
                }
            }
        } else if (branch < 0) {
            c.type = {'A', m};
            c.nodes = walk(ends[0], -1);
        } else {
            std::vector<std::vector<int>> arms;
            for (int v : adj(branch)) arms.push_back(walk(v, branch));
            std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
            auto rev = [](std::vector<int> v) {
                std::reverse(v.begin(), v.end());
                return v;
            };
            if (arms[1].size() == 1) {
                c.type = {'D', m};
                c.nodes = rev(arms[2]);
                c.nodes.push_back(branch);
                c.nodes.push_back(arms[0][0]);
                c.nodes.push_back(arms[1][0]);
            } else {
                c.type = {'E', m};
                std::vector<int> a2 = arms[1], a3 = arms[2];
                c.nodes = {a2[1], arms[0][0], a2[0], branch};
                for (int v : a3) c.nodes.push_back(v);
            }
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.type == b.type)) return b.type < a.type;
        return a.nodes < b.nodes;
    });
    return out;
}

std::string components_str(const std::vector<CartanComponent>& c) {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += "x";
        s += c[i].type.str();
    }
    return s;
}

const RootSystem& RootSystem::cached(const LieType& t) {
    static std::mutex mu;
    static std::map<LieType, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[t];
    if (!slot) slot = std::make_unique<RootSystem>(build(t));
    return *slot;
}

RootSystem RootSystem::build(const LieType& t) {
    validate(t);
    RootSystem rs;
    std::vector<QVec> s = bourbaki_simple(t);
    for (int i = 0; i < t.rank; ++i) {
        IVec e(t.rank, 0);
        e[i] = 1;
        rs.parent_simple_.push_back(e);
    }
    rs.finish(s);
    if (!rs.irreducible() || !(rs.components_[0].type == t)) {
        // D3 is identified as A3; keep the requested label
        if (t.family == 'D' && t.rank == 3) {
            rs.components_ = {{t, {0, 1, 2}}};
        } else {
            throw std::logic_error("build_root_system: type identification mismatch for " + t.str());
        }
    }
    rs.components_[0].nodes.resize(t.rank);
    for (int i = 0; i < t.rank; ++i) rs.components_[0].nodes[i] = i;
    return rs;
}

RootSystem RootSystem::subsystem(const RootSystem& parent, const std::vector<IVec>& simple) {
    RootSystem rs;
    std::vector<QVec> amb;
    for (const auto& v : simple) {
        QVec a(parent.simple_ambient_[0].size(), Rational(0));
        for (int i = 0; i < parent.rank(); ++i)
            for (std::size_t k = 0; k < a.size(); ++k) a[k] += v[i] * parent.simple_ambient_[i][k];
        amb.push_back(a);
    }
    rs.parent_simple_ = simple;
    if (!simple.empty()) rs.finish(amb);
    return rs;
}

void RootSystem::finish(const std::vector<QVec>& s) {
    simple_ambient_ = s;
    rank_ = (int)s.size();
    gram_.assign(rank_, QVec(rank_));
    gram2_.assign(rank_, IVec(rank_));
    cartan_.assign(rank_, IVec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            gram_[i][j] = dot(s[i], s[j]);
            Rational g2 = 2 * gram_[i][j];
            if (g2.get_den() != 1) throw std::logic_error("root system: non-integral doubled Gram matrix");
            gram2_[i][j] = (int)g2.get_num().get_si();
        }
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            Rational a = 2 * gram_[i][j] / gram_[j][j];
            if (a.get_den() != 1) throw std::logic_error("root system: non-integral Cartan entry");
            cartan_[i][j] = (int)a.get_num().get_si();
        }
    // reflection closure in simple-root coordinates
    std::set<IVec> seen;
    std::deque<IVec> q;
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, 0);
        e[i] = 1;
        seen.insert(e);
        q.push_back(e);
    }
    while (!q.empty()) {
        IVec b = q.front();
        q.pop_front();
        for (int i = 0; i < rank_; ++i) {
            int c = 0;
            for (int j = 0; j < rank_; ++j) c += b[j] * cartan_[j][i];
            IVec r = b;
            r[i] -= c;
            if (seen.insert(r).second) q.push_back(r);
        }
    }
    std::vector<IVec> pos;
    for (const auto& r : seen) {
        bool p = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
        bool n = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
        if (!p && !n) throw std::logic_error("root system: mixed-sign root");
        if (p) pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
        int ha = 0, hb = 0;
        for (int c : a) ha += c;
        for (int c : b) hb += c;
        if (ha != hb) return ha < hb;
        return a > b;
    });
    roots_ = pos;
    for (const auto& r : pos) {
        IVec m = r;
        for (auto& c : m) c = -c;
        roots_.push_back(m);
    }
    int nr = (int)roots_.size();
    if (nr > 255) throw std::logic_error("root system too large for byte permutations");
    lookup_.clear();
    for (int i = 0; i < nr; ++i) lookup_[pack_ivec(roots_[i])] = i;
    simple_index_.assign(rank_, -1);
    for (int i = 0; i < rank_; ++i) {
        IVec e(rank_, 0);
        e[i] = 1;
        simple_index_[i] = find_root(e);
    }
    pair2_.assign((std::size_t)nr * nr, 0);
    std::vector<IVec> g2r(nr, IVec(rank_, 0));
    for (int i = 0; i < nr; ++i)
        for (int a = 0; a < rank_; ++a)
            for (int b = 0; b < rank_; ++b) g2r[i][b] += roots_[i][a] * gram2_[a][b];
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            int v = 0;
            for (int b = 0; b < rank_; ++b) v += g2r[i][b] * roots_[j][b];
            pair2_[(std::size_t)i * nr + j] = v;
        }
    int maxlen = 0;
    for (int i = 0; i < nr; ++i) maxlen = std::max(maxlen, pair2(i, i));
    long_.assign(nr, false);
    for (int i = 0; i < nr; ++i) long_[i] = pair2(i, i) == maxlen;
    refl_perm_.assign(rank_, std::vector<std::uint8_t>(nr));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < nr; ++j) {
            IVec r = roots_[j];
            int c = coroot_pair(j, simple_index_[i]);
            r[i] -= c;
            int k = find_root(r);
            if (k < 0) throw std::logic_error("root system: not closed under reflection");
            refl_perm_[i][j] = (std::uint8_t)k;
        }
    std::vector<Rational> lens(rank_);
    for (int i = 0; i < rank_; ++i) lens[i] = gram_[i][i];
    components_ = identify_cartan(cartan_, lens);
    // fundamental weights: omega = A^{-1} alpha
    QMat a(rank_, QVec(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) a[i][j] = cartan_[i][j];
    QMat ai = invert(a);
    cartan_inv_ = ai;
    std::size_t amb = s[0].size();
    weights_ambient_.assign(rank_, QVec(amb, Rational(0)));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            for (std::size_t k = 0; k < amb; ++k) weights_ambient_[i][k] += ai[i][j] * s[j][k];
}

const LieType& RootSystem::lie_type() const {
    if (components_.size() != 1) throw std::logic_error("root system is reducible: " + type_str());
    return components_[0].type;
}

int RootSystem::height(int i) const {
    int h = 0;
    for (int c : roots_[i]) h += c;
    return h;
}

int RootSystem::find_root(const IVec& v) const {
    for (int c : v)
        if (c < -60 || c > 60) return -1;
    auto it = lookup_.find(pack_ivec(v));
    return it == lookup_.end() ? -1 : it->second;
}

QVec RootSystem::root_ambient(int i) const {
    QVec a(simple_ambient_[0].size(), Rational(0));
    for (int j = 0; j < rank_; ++j)
        if (roots_[i][j])
            for (std::size_t k = 0; k < a.size(); ++k) a[k] += roots_[i][j] * simple_ambient_[j][k];
    return a;
}

int RootSystem::coroot_pair(int i, int j) const {
    return 2 * pair2(i, j) / pair2(j, j);
}

IVec RootSystem::coroot(int i) const {
    IVec c(rank_);
    for (int k = 0; k < rank_; ++k) c[k] = roots_[i][k] * gram2_[k][k] / pair2(i, i);
    return c;
}

Rational RootSystem::length2(int i) const {
    return Rational(pair2(i, i), 2);
}

QVec RootSystem::rho_ambient() const {
    QVec r(simple_ambient_[0].size(), Rational(0));
    for (const auto& w : weights_ambient_)
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += w[k];
    return r;
}

QVec RootSystem::half_sum_positive_ambient() const {
    QVec r(simple_ambient_[0].size(), Rational(0));
    for (int i = 0; i < num_positive(); ++i) {
        QVec a = root_ambient(i);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] += a[k];
    }
    for (auto& e : r) e /= 2;
    return r;
}

std::vector<int> RootSystem::neighbours(int i) const {
    std::vector<int> r;
    for (int j = 0; j < rank_; ++j)
        if (j != i && cartan_[i][j] != 0) r.push_back(j);
    return r;
}

CartanVector RootSystem::to_roots(const CartanVector& v) const {
    if (v.basis == Basis::Roots) return v;
    // x = sum y_j omega_j, omega = A^{-1} alpha  =>  c_i = sum_j y_j (A^{-1})_{ji}
    const QMat& ai = cartan_inv_;
    CartanVector r;
    r.basis = Basis::Roots;
    r.coords.assign(rank_, Cyc());
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (sgn(ai[j][i])) r.coords[i] += v.coords[j] * ai[j][i];
    return r;
}

CartanVector RootSystem::to_weights(const CartanVector& v) const {
    if (v.basis == Basis::Weights) return v;
    CartanVector r;
    r.basis = Basis::Weights;
    r.coords.assign(rank_, Cyc());
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i)
            if (cartan_[i][j]) r.coords[j] += v.coords[i] * Rational(cartan_[i][j]);
    return r;
}

std::vector<Cyc> RootSystem::gram_times(const CartanVector& x) const {
    CartanVector c = to_roots(x);
    if ((int)c.coords.size() != rank_) throw std::invalid_argument("Cartan vector has wrong dimension");
    std::vector<Cyc> bx(rank_, Cyc());
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (sgn(gram_[i][j])) bx[i] += c.coords[j] * gram_[i][j];
    return bx;
}

Cyc RootSystem::pairing(const IVec& beta, const CartanVector& x) const {
    std::vector<Cyc> bx = gram_times(x);
    Cyc r;
    for (int i = 0; i < rank_; ++i)
        if (beta[i]) r += bx[i] * Rational(beta[i]);
    return r;
}

Cyc RootSystem::form(const CartanVector& u, const CartanVector& v) const {
    std::vector<Cyc> bv = gram_times(v);
    CartanVector cu = to_roots(u);
    Cyc r;
    for (int i = 0; i < rank_; ++i) r += cu.coords[i] * bv[i];
    return r;
}

bool RootSystem::is_regular(const CartanVector& x) const {
    std::vector<Cyc> bx = gram_times(x);
    for (int k = 0; k < num_positive(); ++k) {
        Cyc v;
        for (int i = 0; i < rank_; ++i)
            if (roots_[k][i]) v += bx[i] * Rational(roots_[k][i]);
        if (v.is_zero()) return false;
    }
    return true;
}

} // namespace lieaut
