#pragma once

#include "lieaut/root_system.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace lieaut {

/* Weights in fundamental-weight coordinates of the ambient group, with multiplicities. */
using Character = std::map<IVec, long>;

/* Reductive subgroup generated by the torus and the roots supported on the given nodes (0-based). */
class Levi {
public:
    Levi(const RootSystem& rs, std::set<int> nodes);

    const RootSystem& root_system() const { return *rs_; }
    const std::set<int>& nodes() const { return nodes_; }
    const std::vector<int>& positive_roots() const { return pos_; }

    bool dominant(const IVec& w) const;
    /* Freudenthal's formula for the irreducible L-module of highest weight hw. */
    Character irreducible(const IVec& hw) const;
    /* Highest weights with multiplicities, in decreasing order of the L-height. */
    std::vector<std::pair<IVec, long>> decompose(Character c) const;

    /* Weight coordinates of the simple root i. */
    IVec simple_root_weight(int i) const;

private:
    const RootSystem* rs_;
    std::set<int> nodes_;
    std::vector<int> pos_;
    std::vector<IVec> root_w_;
    std::vector<Rational> half_len_;

    Rational pair(const IVec& w, int root) const;
};

Character dual(const Character& c);
Character wedge(const Character& c, int q);
long dimension(const Character& c);

std::string weight_str(const IVec& w);

} // namespace lieaut
