#pragma once

#include "lieaut/cyclotomic.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace lieaut {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

struct LieType {
    char family = 'A';
    int rank = 1;

    std::string str() const;
    bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
    static LieType parse(const std::string& s);
    friend bool operator==(const LieType& a, const LieType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator<(const LieType& a, const LieType& b) {
        return a.family != b.family ? a.family < b.family : a.rank < b.rank;
    }
};

void validate(const LieType& t);

/* Components of a Cartan matrix, each with its node list in the order of the standard numbering. */
struct CartanComponent {
    LieType type;
    std::vector<int> nodes;
};
std::vector<CartanComponent> identify_cartan(const IMat& cartan, const std::vector<Rational>& lengths);
std::string components_str(const std::vector<CartanComponent>& c);

enum class Basis { Roots, Weights };

struct CartanVector {
    std::vector<Cyc> coords;
    Basis basis = Basis::Roots;
};

class RootSystem {
public:
    static RootSystem build(const LieType& t);
    /* Shared instance per type, built on first use. */
    static const RootSystem& cached(const LieType& t);
    /* The subsystem with the given simple roots, written in parent root coordinates. */
    static RootSystem subsystem(const RootSystem& parent, const std::vector<IVec>& simple);

    int rank() const { return rank_; }
    /* Irreducible type; throws for reducible subsystems. */
    const LieType& lie_type() const;
    bool irreducible() const { return components_.size() == 1; }
    const std::vector<CartanComponent>& components() const { return components_; }
    std::string type_str() const { return components_str(components_); }

    const IMat& cartan() const { return cartan_; }     // <alpha_i, alpha_j^vee>
    const QMat& gram() const { return gram_; }         // (alpha_i, alpha_j)
    const IMat& gram2() const { return gram2_; }       // 2 (alpha_i, alpha_j)
    const std::vector<QVec>& simple_ambient() const { return simple_ambient_; }
    const std::vector<QVec>& fundamental_weights_ambient() const { return weights_ambient_; }
    QVec rho_ambient() const;
    QVec half_sum_positive_ambient() const;

    int num_roots() const { return (int)roots_.size(); }
    int num_positive() const { return (int)roots_.size() / 2; }
    const IVec& root(int i) const { return roots_[i]; }
    const std::vector<IVec>& roots() const { return roots_; }
    bool is_positive(int i) const { return i < num_positive(); }
    bool is_long(int i) const { return long_[i]; }
    int height(int i) const;
    int negative(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
    int simple_index(int i) const { return simple_index_[i]; }
    /* -1 if the vector is not a root. */
    int find_root(const IVec& v) const;
    QVec root_ambient(int i) const;
    /* 2 (root_i, root_j). */
    int pair2(int i, int j) const { return pair2_[i * num_roots() + j]; }
    /* <root_i, root_j^vee>. */
    int coroot_pair(int i, int j) const;
    /* Coroot of root i in simple-coroot coordinates. */
    IVec coroot(int i) const;
    Rational length2(int i) const;

    /* Permutation of all roots induced by the simple reflection s_i. */
    const std::vector<std::uint8_t>& reflection_perm(int i) const { return refl_perm_[i]; }

    /* Dynkin neighbours of node i (nonzero off-diagonal Cartan entry). */
    std::vector<int> neighbours(int i) const;

    /* (root, x) for x in either basis. */
    Cyc pairing(const IVec& beta, const CartanVector& x) const;
    /* B x with x in root coordinates, reused by repeated pairings. */
    std::vector<Cyc> gram_times(const CartanVector& x) const;
    CartanVector to_roots(const CartanVector& v) const;
    CartanVector to_weights(const CartanVector& v) const;
    Cyc form(const CartanVector& u, const CartanVector& v) const;
    bool is_regular(const CartanVector& x) const;

    /* Embedding of this system's root coordinates into the parent's (identity for full systems). */
    const std::vector<IVec>& parent_simple() const { return parent_simple_; }

private:
    int rank_ = 0;
    std::vector<CartanComponent> components_;
    IMat cartan_;
    QMat cartan_inv_;
    QMat gram_;
    IMat gram2_;
    std::vector<QVec> simple_ambient_;
    std::vector<QVec> weights_ambient_;
    std::vector<IVec> roots_;
    std::vector<bool> long_;
    std::vector<int> simple_index_;
    std::vector<int> pair2_;
    std::vector<std::vector<std::uint8_t>> refl_perm_;
    std::unordered_map<std::uint64_t, int> lookup_;
    std::vector<IVec> parent_simple_;

    void finish(const std::vector<QVec>& simple_ambient);
};

std::uint64_t pack_ivec(const IVec& v);

QMat invert(const QMat& m);
std::vector<Rational> solve(const QMat& a, const QVec& b);

} // namespace lieaut
