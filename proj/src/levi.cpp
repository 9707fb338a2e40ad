#include "lieaut/levi.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lieaut {

Levi::Levi(const RootSystem& rs, std::set<int> nodes) : rs_(&rs), nodes_(std::move(nodes)) {
    for (int v : nodes_)
        if (v < 0 || v >= rs.rank()) throw std::invalid_argument("Levi: node out of range");
    for (int i = 0; i < rs.num_positive(); ++i) {
        bool inside = true;
        for (int j = 0; j < rs.rank() && inside; ++j)
            if (rs.root(i)[j] != 0 && !nodes_.count(j)) inside = false;
        if (inside) pos_.push_back(i);
    }
    for (int i = 0; i < rs.rank(); ++i) half_len_.push_back(rs.gram()[i][i] / 2);
    for (int r : pos_) {
        IVec w(rs.rank(), 0);
        for (int j = 0; j < rs.rank(); ++j)
            for (int k = 0; k < rs.rank(); ++k) w[k] += rs.root(r)[j] * rs.cartan()[j][k];
        root_w_.push_back(w);
    }
}

IVec Levi::simple_root_weight(int i) const { return rs_->cartan()[i]; }

bool Levi::dominant(const IVec& w) const {
    for (int v : nodes_)
        if (w[v] < 0) return false;
    return true;
}

// (w, root) for a positive root of L given by its position in pos_
Rational Levi::pair(const IVec& w, int idx) const {
    Rational s = 0;
    const IVec& c = rs_->root(pos_[idx]);
    for (int k = 0; k < rs_->rank(); ++k)
        if (c[k]) s += Rational(c[k]) * half_len_[k] * w[k];
    return s;
}

Character Levi::irreducible(const IVec& hw) const {
    if (!dominant(hw)) throw std::invalid_argument("Levi::irreducible: " + weight_str(hw) + " is not L-dominant");
    const int r = rs_->rank();
    Character ch;
    ch[hw] = 1;
    // |hw+rhoL|^2 - |mu+rhoL|^2 = sum_i c_i (alpha_i, hw + mu + 2 rhoL), mu = hw - sum c_i alpha_i
    std::vector<std::pair<IVec, IVec>> level{{hw, IVec(r, 0)}};
    while (!level.empty()) {
        std::map<IVec, IVec> next;
        for (const auto& [mu, c] : level)
            for (int i : nodes_) {
                IVec nu = mu, cc = c;
                for (int k = 0; k < r; ++k) nu[k] -= rs_->cartan()[i][k];
                cc[i] += 1;
                next.emplace(nu, cc);
            }
        level.clear();
        for (const auto& [nu, c] : next) {
            if (ch.count(nu)) continue;
            Rational denom = 0;
            for (int i : nodes_)
                if (c[i]) denom += Rational(c[i]) * half_len_[i] * (hw[i] + nu[i] + 2);
            if (denom <= 0) continue;
            Rational num = 0;
            for (std::size_t a = 0; a < pos_.size(); ++a) {
                const IVec& rc = rs_->root(pos_[a]);
                IVec up = nu, depth = c;
                for (;;) {
                    bool below = true;
                    for (int k = 0; k < r; ++k) {
                        up[k] += root_w_[a][k];
                        depth[k] -= rc[k];
                        below = below && depth[k] >= 0;
                    }
                    if (!below) break;
                    auto it = ch.find(up);
                    if (it != ch.end()) num += Rational(it->second) * pair(up, (int)a);
                }
            }
            Rational m = 2 * num / denom;
            if (m == 0) continue;
            if (m.get_den() != 1) throw std::logic_error("Freudenthal: non-integral multiplicity");
            ch[nu] = m.get_num().get_si();
            level.push_back({nu, c});
        }
    }
    return ch;
}

std::vector<std::pair<IVec, long>> Levi::decompose(Character c) const {
    std::vector<std::pair<IVec, long>> out;
    while (!c.empty()) {
        const IVec* top = nullptr;
        for (const auto& [w, m] : c) {
            bool maximal = true;
            for (int i : nodes_) {
                IVec up = w;
                for (int k = 0; k < rs_->rank(); ++k) up[k] += rs_->cartan()[i][k];
                if (c.count(up)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) {
                top = &w;
                break;
            }
        }
        if (!top) throw std::logic_error("decompose: no highest weight");
        IVec hw = *top;
        long m = c.at(hw);
        if (m < 0) throw std::logic_error("decompose: virtual character");
        for (const auto& [w, k] : irreducible(hw)) {
            long& v = c[w];
            v -= m * k;
            if (v == 0) c.erase(w);
        }
        out.push_back({hw, m});
    }
    return out;
}

Character dual(const Character& c) {
    Character out;
    for (const auto& [w, m] : c) {
        IVec n = w;
        for (int& x : n) x = -x;
        out[n] = m;
    }
    return out;
}

Character wedge(const Character& c, int q) {
    std::vector<const IVec*> basis;
    for (const auto& [w, m] : c)
        for (long i = 0; i < m; ++i) basis.push_back(&w);
    int n = (int)basis.size();
    Character out;
    if (q < 0 || q > n) return out;
    int r = c.empty() ? 0 : (int)c.begin()->first.size();
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    for (;;) {
        IVec s(r, 0);
        for (int i : idx)
            for (int k = 0; k < r; ++k) s[k] += (*basis[i])[k];
        out[s] += 1;
        int i = q - 1;
        while (i >= 0 && idx[i] == n - q + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

long dimension(const Character& c) {
    long d = 0;
    for (const auto& [w, m] : c) d += m;
    return d;
}

std::string weight_str(const IVec& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        int a = w[i];
        if (!s.empty()) s += a > 0 ? "+" : "-";
        else if (a < 0) s += "-";
        if (std::abs(a) != 1) s += std::to_string(std::abs(a));
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

} // namespace lieaut
